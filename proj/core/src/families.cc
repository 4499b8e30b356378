// Copyright 2026 The graphsens Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphsens/families.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphsens/constructions.h"
#include "graphsens/predictors.h"
#include "graphsens/sensitivity.h"

namespace graphsens {
namespace {

// Families are built eagerly; anything larger is refused before allocation.
constexpr long long kMaxFamilyOrder = 4096;

std::vector<FamilyInfo> MakeRegistry() {
  std::vector<FamilyInfo> r = {
      {"agave", {"ii", ""}, "K̄_m ∨ P_n"},
      {"complete", {"i", ""}, "K_n"},
      {"complete_bipartite", {"ii", ""}, "K_{m,n}"},
      {"complete_split", {"ii", ""}, "K̄_m ∨ K_n"},
      {"corona_chain", {"g", "g"}, "(...(G_1 ⊙ G_2) ⊙ ...) ⊙ G_k"},
      {"cycle", {"i", ""}, "C_n, n >= 3"},
      {"cycle_star", {"ii", ""}, "C_m glued at a vertex to the apex of K_{1,n}"},
      {"dandelion", {"ii", ""}, "K_{1,m} apex glued to an end of P_n"},
      {"double", {"g", ""}, "G ∨ G"},
      {"empty", {"i", ""}, "K̄_n"},
      {"fan", {"i", ""}, "K_1 ∨ P_n"},
      {"gen_wheel", {"ii", ""}, "K̄_m ∨ C_n"},
      {"gen_windmill_I", {"i", "g"}, "K_m ∨ (H_1 + ... + H_k)"},
      {"gen_windmill_II", {"i", "g"}, "K̄_m ∨ (H_1 + ... + H_k)"},
      {"hamming", {"ii", ""}, "H_{n,q}: q-ary n-tuples at Hamming distance 1"},
      {"hypercube", {"i", ""}, "Q_n"},
      {"multipartite", {"i", "i"}, "K_{n_1,...,n_k}"},
      {"path", {"i", ""}, "P_n"},
      {"pineapple", {"ii", ""}, "K_{1,m} apex glued to a vertex of K_n"},
      {"star", {"i", ""}, "K_{1,n} = K_1 ∨ K̄_n"},
      {"thagomizer", {"i", ""}, "K_{1,1,n}"},
      {"wheel", {"i", ""}, "K_1 ∨ C_n, n >= 3"},
      {"windmill", {"ii", ""}, "K_1 ∨ mK_n"},
  };
  std::sort(r.begin(), r.end(),
            [](const FamilyInfo& a, const FamilyInfo& b) {
              return a.name < b.name;
            });
  return r;
}

const FamilyInfo& Lookup(std::string_view name, const FamilyArgs& args) {
  const FamilyInfo* info = FindFamily(name);
  if (info == nullptr) {
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  }
  // Integers come first in every signature, then graphs.
  const std::string kinds = std::string(args.ints.size(), 'i') +
                            std::string(args.graphs.size(), 'g');
  if (!info->signature.Accepts(kinds)) {
    throw std::invalid_argument(std::string(name) + " expects arguments " +
                                info->signature.ToString());
  }
  return *info;
}

void Require(bool ok, std::string_view name, const std::string& what) {
  if (!ok) {
    throw std::invalid_argument(std::string(name) + ": " + what);
  }
}

long long IntPow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > (1LL << 40)) return out;
  }
  return out;
}

int CeilSqrt(int n) {
  int s = 0;
  while (s * s < n) ++s;
  return s;
}

int CeilHalf(int n) { return (n + 1) / 2; }

Graph Path(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.AddEdge(i, i + 1);
  return std::move(b).Build();
}

Graph Cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.AddEdge(i, (i + 1) % n);
  return std::move(b).Build();
}

Graph Star(int n) { return Cone(1, EmptyGraph(n)); }

Graph Hamming(int n, int q) {
  const int order = static_cast<int>(IntPow(q, n));
  std::vector<int> place(n);
  for (int i = n - 1, p = 1; i >= 0; --i, p *= q) place[i] = p;
  GraphBuilder b(order);
  for (int v = 0; v < order; ++v) {
    for (int i = 0; i < n; ++i) {
      const int digit = (v / place[i]) % q;
      for (int other = digit + 1; other < q; ++other) {
        b.AddEdge(v, v + (other - digit) * place[i]);
      }
    }
  }
  return std::move(b).Build();
}

void CheckInts(std::string_view name, const FamilyArgs& a) {
  const std::vector<int>& p = a.ints;
  auto all_at_least = [&](int lo) {
    return std::all_of(p.begin(), p.end(), [lo](int x) { return x >= lo; });
  };
  if (name == "cycle" || name == "wheel") {
    Require(p[0] >= 3, name, "n must be at least 3");
  } else if (name == "gen_wheel") {
    Require(p[0] >= 1 && p[1] >= 3, name, "needs m >= 1 and n >= 3");
  } else if (name == "cycle_star") {
    Require(p[0] >= 3 && p[1] >= 1, name, "needs m >= 3 and n >= 1");
  } else if (name == "hamming") {
    Require(p[0] >= 1 && p[1] >= 2, name, "needs n >= 1 and q >= 2");
  } else {
    Require(all_at_least(1), name, "parameters must be at least 1");
  }
}

// Closed form for the join of K̄_m with a graph given by its pieces.
struct UnionSummary {
  int order = 0;
  int alpha = 0;
  ExtNat sigma = ExtNat::Infinity();
  bool edgeless = true;
  std::optional<int> common_degree;
  bool regular = true;
};

UnionSummary Summarize(const std::vector<Graph>& parts) {
  UnionSummary s;
  for (const Graph& h : parts) {
    const SensitivityProfile p = Profile(h);
    s.order += h.order();
    s.alpha += p.alpha;
    s.sigma = Min(s.sigma, p.sigma);
    s.edgeless = s.edgeless && h.IsEdgeless();
    const std::optional<int> d = IsRegular(h);
    if (!d || (s.common_degree && *s.common_degree != *d)) s.regular = false;
    if (d) s.common_degree = d;
  }
  return s;
}

ExpectedValue Value(ExtNat v, std::string formula) {
  return ExpectedValue{v, std::move(formula)};
}

}  // namespace

bool Signature::Accepts(std::string_view kinds) const {
  if (kinds.size() < fixed.size()) return false;
  if (kinds.substr(0, fixed.size()) != fixed) return false;
  std::string_view rest = kinds.substr(fixed.size());
  if (repeat.empty()) return rest.empty();
  if (rest.empty() || rest.size() % repeat.size() != 0) return false;
  for (std::size_t i = 0; i < rest.size(); i += repeat.size()) {
    if (rest.substr(i, repeat.size()) != repeat) return false;
  }
  return true;
}

std::string Signature::ToString() const {
  auto spell = [](std::string_view kinds) {
    std::string out;
    for (char c : kinds) {
      if (!out.empty()) out += ", ";
      out += c == 'i' ? "int" : "graph";
    }
    return out;
  };
  std::string out = "(" + spell(fixed);
  if (!repeat.empty()) {
    if (!fixed.empty()) out += ", ";
    out += spell(repeat) + ", ...";
  }
  return out + ")";
}

const std::vector<FamilyInfo>& FamilyRegistry() {
  static const std::vector<FamilyInfo> registry = MakeRegistry();
  return registry;
}

const FamilyInfo* FindFamily(std::string_view name) {
  for (const FamilyInfo& info : FamilyRegistry()) {
    if (info.name == name) return &info;
  }
  return nullptr;
}

long long FamilyOrder(std::string_view name, const FamilyArgs& args) {
  Lookup(name, args);
  for (const Graph& g : args.graphs) {
    Require(g.order() > 0, name, "graph arguments need at least one vertex");
  }
  if (!args.ints.empty()) CheckInts(name, args);
  const std::vector<int>& p = args.ints;
  const long long a = p.empty() ? 0 : p[0];
  const long long b = p.size() < 2 ? 0 : p[1];
  long long graphs_order = 0;
  for (const Graph& g : args.graphs) graphs_order += g.order();

  if (name == "empty" || name == "complete" || name == "path" ||
      name == "cycle") {
    return a;
  }
  if (name == "star" || name == "fan" || name == "wheel") return a + 1;
  if (name == "thagomizer") return a + 2;
  if (name == "windmill") return 1 + a * b;
  if (name == "multipartite") {
    return std::accumulate(p.begin(), p.end(), 0LL);
  }
  if (name == "gen_windmill_I" || name == "gen_windmill_II") {
    return a + graphs_order;
  }
  if (name == "hypercube") return IntPow(2, static_cast<int>(a));
  if (name == "hamming") return IntPow(b, static_cast<int>(a));
  if (name == "double") return 2 * graphs_order;
  if (name == "corona_chain") {
    long long order = args.graphs[0].order();
    for (std::size_t i = 1; i < args.graphs.size(); ++i) {
      order *= 1 + args.graphs[i].order();
      if (order > (1LL << 40)) return order;
    }
    return order;
  }
  // complete_bipartite, complete_split, agave, gen_wheel, dandelion,
  // cycle_star, pineapple.
  return a + b;
}

Graph BuildFamily(std::string_view name, const FamilyArgs& args) {
  const long long order = FamilyOrder(name, args);
  Require(order <= kMaxFamilyOrder, name,
          "order " + std::to_string(order) + " exceeds " +
              std::to_string(kMaxFamilyOrder));
  const std::vector<int>& p = args.ints;
  const std::vector<Graph>& g = args.graphs;

  if (name == "empty") return EmptyGraph(p[0]);
  if (name == "complete") return CompleteGraph(p[0]);
  if (name == "path") return Path(p[0]);
  if (name == "cycle") return Cycle(p[0]);
  if (name == "star") return Star(p[0]);
  if (name == "thagomizer") return Cone(1, Star(p[0]));
  if (name == "complete_bipartite") {
    return Join(EmptyGraph(p[0]), EmptyGraph(p[1]));
  }
  if (name == "multipartite") {
    std::vector<Graph> parts;
    for (int n : p) parts.push_back(EmptyGraph(n));
    return GeneralizedJoin(CompleteGraph(static_cast<int>(p.size())), parts);
  }
  if (name == "complete_split") return Cone(p[0], CompleteGraph(p[1]));
  if (name == "windmill") {
    std::vector<Graph> blades(p[0], CompleteGraph(p[1]));
    return Cone(1, DisjointUnion(blades));
  }
  if (name == "gen_windmill_I") {
    return Join(CompleteGraph(p[0]), DisjointUnion(g));
  }
  if (name == "gen_windmill_II") return Cone(p[0], DisjointUnion(g));
  if (name == "fan") return Cone(1, Path(p[0]));
  if (name == "wheel") return Cone(1, Cycle(p[0]));
  if (name == "agave") return Cone(p[0], Path(p[1]));
  if (name == "gen_wheel") return Cone(p[0], Cycle(p[1]));
  if (name == "dandelion") return IdentifyVertices(Star(p[0]), 0, Path(p[1]), 0);
  if (name == "cycle_star") {
    return IdentifyVertices(Cycle(p[0]), 0, Star(p[1]), 0);
  }
  if (name == "pineapple") {
    return IdentifyVertices(Star(p[0]), 0, CompleteGraph(p[1]), 0);
  }
  if (name == "hypercube") return Hamming(p[0], 2);
  if (name == "hamming") return Hamming(p[0], p[1]);
  if (name == "double") return RepeatedJoin(g[0], 2);
  if (name == "corona_chain") {
    Graph out = g[0];
    for (std::size_t i = 1; i < g.size(); ++i) out = Corona(out, g[i]);
    return out;
  }
  throw std::logic_error("family '" + std::string(name) + "' has no builder");
}

std::optional<ExpectedValue> ExpectedSensitivity(std::string_view name,
                                                 const FamilyArgs& args) {
  FamilyOrder(name, args);
  const std::vector<int>& p = args.ints;
  const std::vector<Graph>& g = args.graphs;
  const int a = p.empty() ? 0 : p[0];
  const int b = p.size() < 2 ? 0 : p[1];

  if (name == "empty") {
    return Value(ExtNat::Infinity(), "edgeless graph: sigma = inf");
  }
  if (name == "complete") {
    if (a == 1) return Value(ExtNat::Infinity(), "K_1 is edgeless: inf");
    return Value(1, "sigma(K_n) = 1 for n >= 2");
  }
  if (name == "path") {
    if (a == 1) return Value(ExtNat::Infinity(), "P_1 is edgeless: inf");
    if (a >= 4) return Value(1, "sigma(P_n) = 1 for n >= 4");
    return std::nullopt;
  }
  if (name == "cycle") {
    if (a >= 5) return Value(1, "sigma(C_n) = 1 for n >= 5");
    return std::nullopt;
  }
  if (name == "star") return Value(a, "sigma(K_{1,n}) = n");
  if (name == "thagomizer") return Value(a, "sigma(K_{1,1,n}) = n");
  if (name == "complete_bipartite" || name == "multipartite") {
    std::vector<int> sizes = p;
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return Value(CompleteBipartiteSensitivity(sizes[0], sizes[1]),
                 "two largest parts n1 >= n2: n1+1-n2 if n2 <= "
                 "floor((n1+1)/2), else ceil((n1+1)/2)");
  }
  if (name == "complete_split") return Value(a, "sigma(K̄_m ∨ K_n) = m");
  if (name == "windmill") {
    if (b >= 2) return Value(1, "sigma(K_1 ∨ mK_n) = sigma(mK_n) = 1, n >= 2");
    return Value(a, "windmill(m, 1) is the star K_{1,m}: m");
  }
  if (name == "fan") {
    if (a >= 4) return Value(1, "sigma(K_1 ∨ P_n) = 1 for n >= 4");
    return std::nullopt;
  }
  if (name == "wheel") {
    if (a >= 5) return Value(1, "sigma(K_1 ∨ C_n) = 1 for n >= 5");
    return std::nullopt;
  }
  if (name == "agave") {
    if (a >= 3 && b >= 4 && a <= CeilHalf(b)) {
      return Value(1, "sigma(K̄_m ∨ P_n) = 1 for 3 <= m <= ceil(n/2), n >= 4");
    }
    return std::nullopt;
  }
  if (name == "gen_wheel") {
    if (a >= 2 * b - 3) {
      return Value(a - b + 3, "sigma(K̄_m ∨ C_n) = m-n+3 for m >= 2n-3");
    }
    if (a >= 3 && b >= 5 && a <= b / 2) {
      return Value(1,
                   "sigma(K̄_m ∨ C_n) = 1 for 3 <= m <= floor(n/2), n >= 5");
    }
    return std::nullopt;
  }
  if (name == "dandelion") {
    if (b > 4) return Value(1, "sigma(D_{m,n}) = sigma(P_n) = 1 for n > 4");
    if (b == 4 && a >= 2) return Value(2, "sigma(D_{m,4}) = 2 for m >= 2");
    return std::nullopt;
  }
  if (name == "cycle_star") {
    if (a >= 5) return Value(1, "sigma(CS_{m,n}) = 1 for m >= 5");
    return std::nullopt;
  }
  if (name == "pineapple") {
    if (b >= 3) return Value(1, "sigma(P_{m,n}) = 1 for m >= 1, n >= 3");
    return std::nullopt;
  }
  if (name == "hypercube") {
    return Value(CeilSqrt(a), "sigma(Q_n) = ceil(sqrt(n))");
  }
  if (name == "hamming") {
    if (b >= 3) return Value(1, "sigma(H_{n,q}) = 1 for q >= 3");
    return Value(CeilSqrt(a), "H_{n,2} = Q_n: ceil(sqrt(n))");
  }
  if (name == "double") {
    const SensitivityProfile pr = Profile(g[0]);
    return Value(Min(pr.sigma, ExtNat(CeilHalf(pr.alpha + 1))),
                 "sigma(G ∨ G) = min{sigma(G), ceil((alpha(G)+1)/2)}");
  }
  if (name == "corona_chain") {
    const Graph& h = g.back();
    if (h.IsEdgeless()) {
      return Value(h.order(), "sigma(G ⊙ K̄_n) = n");
    }
    return Value(Sensitivity(h), "sigma(G ⊙ H) = sigma(H) for H with an edge");
  }
  if (name == "gen_windmill_I") {
    const UnionSummary u = Summarize(g);
    if (u.edgeless) {
      return Value(u.order, "K_m ∨ K̄_N is a complete split graph: N");
    }
    return Value(u.sigma, "sigma(K_m ∨ (H_1+...+H_k)) = min sigma(H_i)");
  }
  if (name == "gen_windmill_II") {
    const UnionSummary u = Summarize(g);
    if (u.edgeless) {
      return Value(CompleteBipartiteSensitivity(a, u.order),
                   "K̄_m ∨ K̄_N = K_{m,N}");
    }
    if (a <= u.alpha) {
      if (a == 1) {
        return Value(u.sigma, "sigma(K_1 ∨ U) = sigma(U) for U with an edge");
      }
      return Value(Min(u.sigma, ExtNat(MinOfMax(u.alpha + 1, a))),
                   "m <= sum alpha(H_i): min{min sigma(H_i), "
                   "min_{j<=m} max{j, alpha+1-j}}");
    }
    if (u.regular && a >= 2 * u.order - *u.common_degree - 1) {
      return Value(a - u.order + *u.common_degree + 1,
                   "U d-regular on L vertices, m >= 2L-d-1: m-L+d+1");
    }
    return std::nullopt;
  }
  throw std::logic_error("family '" + std::string(name) + "' has no catalog");
}

}  // namespace graphsens
