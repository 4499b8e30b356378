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

#include "graphsens/verify.h"

#include <string>
#include <utility>
#include <vector>

#include "graphsens/constructions.h"
#include "graphsens/families.h"
#include "graphsens/stable_blocks.h"

namespace graphsens {
namespace {

struct Children {
  std::vector<Graph> graphs;
  std::vector<const Expr*> exprs;
  std::vector<int> ints;
};

Children Evaluate(const Expr& e, const Bindings& b, int max_vertices) {
  Children c;
  for (const ExprArg& a : e.args) {
    if (a.kind == ExprArg::Kind::kGraph) {
      c.graphs.push_back(BuildExpr(*a.graph, b, max_vertices));
      c.exprs.push_back(a.graph.get());
    } else {
      c.ints.push_back(ArgValue(a, b));
    }
  }
  return c;
}

bool IsFamily(const Expr* e, std::string_view name) {
  return e->kind == ExprKind::kFamily && e->name == name;
}

bool IsComplete(const Graph& g) {
  const long long n = g.order();
  return g.EdgeCount() == n * (n - 1) / 2;
}

Prediction FromBound(std::string name, const RootedProductBoundReport& r) {
  Prediction p;
  p.predictor = std::move(name);
  p.upper_bound = true;
  if (r.bound) {
    p.applicable = true;
    p.value = r.bound;
    p.case_label = "qualifying attachments:";
    for (const AttachmentCheck& c : r.checks) {
      if (!c.qualifies()) continue;
      p.case_label += " " + std::to_string(c.index);
      p.trace.push_back(TraceTerm{"interior sigma", c.index, *c.interior_sigma});
    }
  } else {
    p.reason = "no attachment qualifies";
    for (const AttachmentCheck& c : r.checks) {
      if (!c.trivial) {
        p.reason += "; " + std::to_string(c.index) + ": " + c.reason;
      }
    }
  }
  return p;
}

// K̄_m ∨ G written as a named family: m and G.
std::optional<std::pair<int, Graph>> ConeForm(const Expr& e,
                                              const Children& c) {
  const std::vector<int>& p = c.ints;
  const std::string& n = e.name;
  auto path = [](int k) { return BuildFamily("path", {{k}, {}}); };
  auto cycle = [](int k) { return BuildFamily("cycle", {{k}, {}}); };
  if (n == "star") return std::pair{1, EmptyGraph(p[0])};
  if (n == "thagomizer") return std::pair{1, BuildFamily("star", {{p[0]}, {}})};
  if (n == "complete_bipartite") return std::pair{p[0], EmptyGraph(p[1])};
  if (n == "complete_split") return std::pair{p[0], CompleteGraph(p[1])};
  if (n == "windmill") {
    return std::pair{1, DisjointUnion(std::vector<Graph>(p[0], CompleteGraph(p[1])))};
  }
  if (n == "gen_windmill_II") return std::pair{p[0], DisjointUnion(c.graphs)};
  if (n == "fan") return std::pair{1, path(p[0])};
  if (n == "wheel") return std::pair{1, cycle(p[0])};
  if (n == "agave") return std::pair{p[0], path(p[1])};
  if (n == "gen_wheel") return std::pair{p[0], cycle(p[1])};
  return std::nullopt;
}

void AddConePredictions(int m, const Graph& g, std::vector<Prediction>& out) {
  out.push_back(PredictNCone(m, g));
  out.push_back(PredictNConeRegular(m, g));
}

std::vector<Prediction> ShapePredictions(const Expr& e, const Bindings& b,
                                         int max_vertices) {
  const Children c = Evaluate(e, b, max_vertices);
  const std::vector<Graph>& g = c.graphs;
  std::vector<Prediction> out;
  switch (e.kind) {
    case ExprKind::kFamily: {
      const FamilyArgs args{c.ints, g};
      Prediction p;
      p.predictor = "catalog";
      if (auto v = ExpectedSensitivity(e.name, args)) {
        p.applicable = true;
        p.value = v->value;
        p.case_label = v->formula;
      } else {
        p.reason = "no closed form for these parameters";
      }
      out.push_back(std::move(p));
      if (e.name == "multipartite" || e.name == "complete_bipartite") {
        out.push_back(PredictMultipartite(c.ints));
      }
      if (e.name == "double") out.push_back(PredictRepeatedJoin(g[0], 2));
      if (e.name == "gen_windmill_I") {
        out.push_back(PredictJoinComplete(DisjointUnion(g), c.ints[0]));
      }
      if (e.name == "gen_windmill_II") {
        out.push_back(PredictConeOverUnion(c.ints[0], g));
      }
      if (e.name == "corona_chain") {
        Graph prefix = g[0];
        for (std::size_t i = 1; i + 1 < g.size(); ++i) prefix = Corona(prefix, g[i]);
        out.push_back(PredictCorona(prefix, g.back()));
      }
      if (auto cone = ConeForm(e, c)) {
        AddConePredictions(cone->first, cone->second, out);
      }
      break;
    }
    case ExprKind::kJoin: {
      out.push_back(PredictJoin(g[0], g[1]));
      for (int side = 0; side < 2; ++side) {
        const Expr* x = c.exprs[side];
        const Graph& other = g[1 - side];
        const Expr* other_expr = c.exprs[1 - side];
        if (IsFamily(x, "empty")) {
          const int m = g[side].order();
          AddConePredictions(m, other, out);
          if (other_expr->kind == ExprKind::kUnion) {
            out.push_back(PredictConeOverUnion(
                m, Evaluate(*other_expr, b, max_vertices).graphs));
          }
        }
        if (IsFamily(x, "complete")) {
          out.push_back(PredictJoinComplete(other, g[side].order()));
        }
      }
      break;
    }
    case ExprKind::kCone: {
      const int m = c.ints[0];
      AddConePredictions(m, g[0], out);
      out.push_back(PredictJoin(EmptyGraph(m), g[0]));
      const Expr* inner = c.exprs[0];
      if (inner->kind == ExprKind::kUnion) {
        out.push_back(PredictConeOverUnion(
            m, Evaluate(*inner, b, max_vertices).graphs));
      } else if (inner->kind == ExprKind::kCopies) {
        const Children ic = Evaluate(*inner, b, max_vertices);
        out.push_back(PredictConeOverUnion(
            m, std::vector<Graph>(ic.ints[0], ic.graphs[0])));
      }
      break;
    }
    case ExprKind::kUnion:
      out.push_back(PredictParallel(g));
      break;
    case ExprKind::kCopies: {
      const int copies = c.ints[0];
      out.push_back(PredictParallel(std::vector<Graph>(copies, g[0])));
      if (!g[0].IsEdgeless()) out.push_back(PredictKSensCopies(g[0], copies, 1));
      break;
    }
    case ExprKind::kGenJoin: {
      const Graph& base = g[0];
      const std::span<const Graph> parts = std::span(g).subspan(1);
      if (base.IsEdgeless()) out.push_back(PredictParallel(parts));
      if (IsComplete(base) && parts.size() == 2) {
        out.push_back(PredictJoin(parts[0], parts[1]));
      }
      bool all_edgeless = true;
      std::vector<int> sizes;
      for (const Graph& h : parts) {
        all_edgeless = all_edgeless && h.IsEdgeless();
        sizes.push_back(h.order());
      }
      if (IsComplete(base) && all_edgeless && sizes.size() >= 2) {
        out.push_back(PredictMultipartite(sizes));
      }
      break;
    }
    case ExprKind::kLex: {
      const Graph& base = g[0];
      const int t = base.order();
      if (base.IsEdgeless()) {
        out.push_back(PredictParallel(std::vector<Graph>(t, g[1])));
      } else if (IsComplete(base) && t >= 2) {
        out.push_back(PredictRepeatedJoin(g[1], t));
        if (g[1].IsEdgeless()) {
          out.push_back(PredictMultipartite(std::vector<int>(t, g[1].order())));
        }
      }
      break;
    }
    case ExprKind::kCorona: {
      out.push_back(PredictCorona(g[0], g[1]));
      const Graph corona = Corona(g[0], g[1]);
      if (g[0].order() >= 2) {
        out.push_back(PartitionSensitivity(
            corona, CoronaPartition(g[0].order(), g[1].order())));
      }
      std::vector<RootedGraph> hang(g[0].order(), RootedGraph{Cone(1, g[1]), 0});
      out.push_back(FromBound("rooted_product_bound",
                              RootedProductBound(g[0], hang)));
      break;
    }
    case ExprKind::kRooted: {
      std::vector<RootedGraph> attachments;
      for (std::size_t i = 1; i < g.size(); ++i) {
        attachments.push_back(MakeRooted(g[i], c.ints[i - 1]));
      }
      out.push_back(FromBound("rooted_product_bound",
                              RootedProductBound(g[0], attachments)));
      break;
    }
    case ExprKind::kIdentify: {
      for (int side = 0; side < 2; ++side) {
        const Graph& base = g[side];
        std::vector<RootedGraph> attachments(base.order(),
                                             RootedGraph{CompleteGraph(1), 0});
        attachments[c.ints[side]] = MakeRooted(g[1 - side], c.ints[1 - side]);
        out.push_back(FromBound(side == 0 ? "gluing_bound(second)"
                                          : "gluing_bound(first)",
                                RootedProductBound(base, attachments)));
      }
      break;
    }
    case ExprKind::kRepJoin:
      out.push_back(PredictRepeatedJoin(g[0], c.ints[0]));
      break;
  }
  return out;
}

}  // namespace

bool Agrees(const Prediction& p, ExtNat sigma) {
  if (!p.applicable) return true;
  return p.upper_bound ? sigma <= *p.value : sigma == *p.value;
}

std::vector<Prediction> PredictionsFor(const Expr& expr,
                                       const Bindings& bindings,
                                       const Graph& g,
                                       const VerifyOptions& options) {
  std::vector<Prediction> out =
      ShapePredictions(expr, bindings, options.max_vertices);
  if (!options.with_checks) return out;

  Prediction oracle;
  oracle.predictor = "oracle";
  if (g.order() <= options.oracle_limit) {
    oracle.applicable = true;
    oracle.value = OracleKSensitivity(g, 1, options.oracle_limit);
    oracle.case_label = "exhaustive over (alpha+1)-subsets";
  } else {
    oracle.reason = "above the oracle limit of " +
                    std::to_string(options.oracle_limit) + " vertices";
  }
  out.push_back(std::move(oracle));

  Prediction critical;
  critical.predictor = "critical_block_bound";
  critical.upper_bound = true;
  if (g.order() > kDefaultCriticalSearchLimit) {
    critical.reason = "above the critical-set search limit";
  } else {
    const CriticalBlockResult r = CriticalStableBlock(g);
    if (!r.block) {
      critical.reason = r.reason;
    } else if (r.block->interior_sigma.is_infinite()) {
      critical.reason = "interior of " + ToString(r.closure) + " has no edge";
    } else {
      critical.applicable = true;
      critical.value = r.block->interior_sigma;
      critical.case_label = "X = " + ToString(r.closure);
    }
  }
  out.push_back(std::move(critical));
  return out;
}

std::optional<Prediction> PrimaryPrediction(const Expr& expr,
                                            const Bindings& bindings,
                                            const Graph& g,
                                            int max_vertices) {
  VerifyOptions options;
  options.max_vertices = max_vertices;
  options.with_checks = false;
  for (Prediction& p : PredictionsFor(expr, bindings, g, options)) {
    if (p.applicable && !p.upper_bound) return std::move(p);
  }
  return std::nullopt;
}

VerificationReport Verify(const Expr& expr, const Bindings& bindings,
                          const VerifyOptions& options) {
  const Graph g = BuildExpr(expr, bindings, options.max_vertices);
  VerificationReport report;
  report.expression = ToString(expr);
  report.order = g.order();
  report.max_degree = MaxDegree(g);
  report.alpha = IndependenceNumber(g);
  report.sigma = Sensitivity(g);
  report.predictions = PredictionsFor(expr, bindings, g, options);
  for (const Prediction& p : report.predictions) {
    report.agree = report.agree && Agrees(p, report.sigma);
  }
  return report;
}

}  // namespace graphsens
