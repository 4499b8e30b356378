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

#include "graphsens/predictors.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphsens/sensitivity.h"

namespace graphsens {
namespace {

int CeilDiv(int a, int b) { return (a + b - 1) / b; }

// alpha and sigma_k of one operand.
struct Component {
  int order = 0;
  SensitivityProfile profile;

  int alpha() const { return profile.alpha; }
  ExtNat sigma() const { return profile.sigma; }
  // sigma_k with its conventions, or nullopt where it is undefined (such a
  // term drops out of any minimum).
  std::optional<ExtNat> SigmaK(int k) const {
    if (k <= 0) return ExtNat(0);
    if (profile.sigma_k.empty()) {
      if (k <= order) return ExtNat::Infinity();
      return std::nullopt;
    }
    if (k <= static_cast<int>(profile.sigma_k.size())) {
      return ExtNat(profile.sigma_k[k - 1]);
    }
    return std::nullopt;
  }
};

Component Analyze(const Graph& g, const char* what) {
  if (g.order() == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": operand has zero vertices");
  }
  return Component{g.order(), Profile(g)};
}

// Running minimum over trace terms; the empty minimum is infinity.
class MinAccumulator {
 public:
  void Add(std::string name, int j, ExtNat value) {
    trace_.push_back(TraceTerm{std::move(name), j, value});
    min_ = Min(min_, value);
  }
  ExtNat min() const { return min_; }
  std::vector<TraceTerm> TakeTrace() { return std::move(trace_); }

 private:
  ExtNat min_ = ExtNat::Infinity();
  std::vector<TraceTerm> trace_;
};

Prediction Applicable(std::string predictor, ExtNat value,
                      std::string case_label,
                      std::vector<TraceTerm> trace = {}) {
  Prediction p;
  p.predictor = std::move(predictor);
  p.applicable = true;
  p.value = value;
  p.case_label = std::move(case_label);
  p.trace = std::move(trace);
  return p;
}

Prediction NotApplicable(std::string predictor, std::string reason) {
  Prediction p;
  p.predictor = std::move(predictor);
  p.reason = std::move(reason);
  return p;
}

// c_j = max{j, base + 1 - j + sigma_{j - alpha_2}(G2)}.
ExtNat CTerm(int j, int base, const Component& g2) {
  std::optional<ExtNat> s = g2.SigmaK(j - g2.alpha());
  if (!s) throw std::logic_error("c_j evaluated outside its index range");
  return Max(ExtNat(j), ExtNat(base + 1 - j) + *s);
}

// The two cases of the join formula with G1 the operand of larger alpha.
// `second_case` selects the |V2| >= alpha_1 form.
std::pair<ExtNat, std::vector<TraceTerm>> JoinCase(const Component& g1,
                                                   const Component& g2,
                                                   bool second_case) {
  const int a1 = g1.alpha();
  const int a2 = g2.alpha();
  MinAccumulator acc;
  acc.Add("sigma(G1)", 0, g1.sigma());
  for (int j = 1; j <= a2; ++j) {
    acc.Add("b", j, std::max(j, a1 + 1 - j));
  }
  const int last_c = second_case ? a1 : g2.order;
  for (int j = a2 + 1; j <= last_c; ++j) acc.Add("c", j, CTerm(j, a1, g2));
  if (second_case) {
    if (std::optional<ExtNat> tail = g2.SigmaK(a1 + 1 - a2)) {
      acc.Add("sigma_k(G2)", a1 + 1 - a2, *tail);
    }
  }
  return {acc.min(), acc.TakeTrace()};
}

}  // namespace

int MinOfMax(int r, int s) {
  if (r < 1 || s < 1) {
    throw std::invalid_argument("MinOfMax needs positive arguments");
  }
  return s <= r / 2 ? r - s : CeilDiv(r, 2);
}

int CompleteBipartiteSensitivity(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("complete bipartite parts must be nonempty");
  }
  if (m > n) std::swap(m, n);
  return m <= (n + 1) / 2 ? n + 1 - m : CeilDiv(n + 1, 2);
}

Prediction PredictJoin(const Graph& g1, const Graph& g2) {
  Component c1 = Analyze(g1, "join");
  Component c2 = Analyze(g2, "join");
  std::string label;
  if (c1.alpha() < c2.alpha()) {
    std::swap(c1, c2);
    label = "swapped;";
  }
  const bool first = c2.order <= c1.alpha();
  const bool second = c2.order >= c1.alpha();
  if (first && second) {
    auto [v1, trace1] = JoinCase(c1, c2, false);
    auto [v2, trace2] = JoinCase(c1, c2, true);
    if (v1 != v2) {
      throw std::logic_error("join formula cases disagree at |V2| = alpha_1: " +
                             ToString(v1) + " vs " + ToString(v2));
    }
    return Applicable("join", v1, label + "|V2|=alpha1", std::move(trace1));
  }
  auto [value, trace] = JoinCase(c1, c2, second);
  return Applicable("join", value,
                    label + (second ? "|V2|>alpha1" : "|V2|<alpha1"),
                    std::move(trace));
}

Prediction PredictRepeatedJoin(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("repeated join needs t >= 2");
  const Component c = Analyze(g, "repeated join");
  MinAccumulator acc;
  acc.Add("sigma(G)", 0, c.sigma());
  acc.Add("ceil((alpha+1)/2)", 0, CeilDiv(c.alpha() + 1, 2));
  return Applicable("repeated_join", acc.min(),
                    g.IsEdgeless() ? "edgeless" : "with edges",
                    acc.TakeTrace());
}

Prediction PredictJoinComplete(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
  if (g.order() == 0) {
    throw std::invalid_argument("join with K_n: operand has zero vertices");
  }
  if (g.IsEdgeless()) {
    return Applicable("join_complete", g.order(), "G edgeless: |V_G|");
  }
  return Applicable("join_complete", Sensitivity(g), "G has edges: sigma(G)");
}

Prediction PredictNCone(int n, const Graph& g) {
  if (n < 1) throw std::invalid_argument("n-cone needs n >= 1");
  if (n == 1) {
    Prediction p = PredictJoinComplete(g, 1);
    p.predictor = "ncone";
    p.case_label = "n=1 via K_1 join; " + p.case_label;
    return p;
  }
  const Component c = Analyze(g, "n-cone");
  const int a = c.alpha();
  const int order = c.order;

  auto c_terms = [&](int last, MinAccumulator& acc) {
    for (int j = 1; j <= last; ++j) acc.Add("c", j, CTerm(j, n, c));
  };
  auto large = [&] {
    MinAccumulator acc;
    c_terms(order, acc);
    return std::pair{acc.min(), acc.TakeTrace()};
  };
  auto small = [&] {
    MinAccumulator acc;
    for (int j = 1; j <= n; ++j) acc.Add("b", j, std::max(j, a + 1 - j));
    acc.Add("sigma(G)", 0, c.sigma());
    const ExtNat closed = Min(c.sigma(), MinOfMax(a + 1, n));
    if (closed != acc.min()) {
      throw std::logic_error("n-cone: closed form disagrees with minimum");
    }
    return std::pair{acc.min(), acc.TakeTrace()};
  };

  if (n >= order && n <= a) {
    auto [v1, t1] = large();
    auto [v3, t3] = small();
    if (v1 != v3) {
      throw std::logic_error("n-cone cases disagree at n = |V| = alpha");
    }
    return Applicable("ncone", v1, "n>=|V| and n<=alpha", std::move(t1));
  }
  if (n >= order) {
    auto [v, t] = large();
    return Applicable("ncone", v, "n>=|V|", std::move(t));
  }
  if (n > a) {
    MinAccumulator acc;
    c_terms(n, acc);
    acc.Add("sigma_k(G)", n + 1 - a, *c.SigmaK(n + 1 - a));
    return Applicable("ncone", acc.min(), "alpha<n<|V|", acc.TakeTrace());
  }
  auto [v, t] = small();
  return Applicable("ncone", v, "n<=alpha", std::move(t));
}

Prediction PredictNConeRegular(int m, const Graph& g) {
  if (m < 1) throw std::invalid_argument("n-cone needs m >= 1");
  const std::optional<int> d = IsRegular(g);
  if (!d) return NotApplicable("ncone_regular", "G is not regular");
  const int n = g.order();
  if (m < 2 * n - *d - 1) {
    return NotApplicable("ncone_regular",
                         "m = " + std::to_string(m) + " < 2n-d-1 = " +
                             std::to_string(2 * n - *d - 1));
  }
  return Applicable("ncone_regular", m - n + *d + 1, "m>=2n-d-1");
}

Prediction PredictMultipartite(std::span<const int> part_sizes) {
  if (part_sizes.size() < 2) {
    throw std::invalid_argument("multipartite needs at least two parts");
  }
  std::vector<int> sizes(part_sizes.begin(), part_sizes.end());
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("multipartite part sizes >= 1");
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  const int n1 = sizes[0];
  const int n2 = sizes[1];
  return Applicable("multipartite", CompleteBipartiteSensitivity(n1, n2),
                    n2 <= (n1 + 1) / 2 ? "n2<=floor((n1+1)/2)"
                                       : "n2>floor((n1+1)/2)");
}

Prediction PredictKSensCopies(const Graph& g, int copies, int k) {
  if (copies < 1) throw std::invalid_argument("need at least one copy");
  if (g.IsEdgeless()) {
    throw std::invalid_argument("copies predictor needs a graph with edges");
  }
  const Component c = Analyze(g, "copies");
  const int max_k = copies * (c.order - c.alpha());
  if (k < 1 || k > max_k) {
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " outside [1, " + std::to_string(max_k) + "]");
  }
  const int l = CeilDiv(k, copies);
  return Applicable("k_sens_copies", *c.SigmaK(l),
                    "l=ceil(k/n)=" + std::to_string(l),
                    {TraceTerm{"sigma_l(G)", l, *c.SigmaK(l)}});
}

Prediction PredictParallel(std::span<const Graph> parts) {
  if (parts.empty()) throw std::invalid_argument("no parts");
  MinAccumulator acc;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Component c = Analyze(parts[i], "parallel");
    acc.Add("sigma(H_i)", static_cast<int>(i) + 1, c.sigma());
  }
  return Applicable("parallel", acc.min(), "min over parts", acc.TakeTrace());
}

Prediction PredictCorona(const Graph& g, const Graph& h) {
  if (g.order() == 0) {
    throw std::invalid_argument("corona: base graph has zero vertices");
  }
  if (h.order() == 0) {
    return NotApplicable("corona", "H has zero vertices");
  }
  if (h.IsEdgeless()) return Applicable("corona", h.order(), "H edgeless");
  return Applicable("corona", Sensitivity(h), "H has edges");
}

Prediction PredictConeOverUnion(int m, std::span<const Graph> parts) {
  if (m < 1) throw std::invalid_argument("cone needs m >= 1");
  if (parts.empty()) throw std::invalid_argument("no parts");
  int total_alpha = 0;
  int total_order = 0;
  bool edgeless = true;
  MinAccumulator acc;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Component c = Analyze(parts[i], "cone over union");
    total_alpha += c.alpha();
    total_order += c.order;
    edgeless = edgeless && parts[i].IsEdgeless();
    acc.Add("sigma(H_i)", static_cast<int>(i) + 1, c.sigma());
  }
  if (edgeless) {
    return Applicable("cone_over_union",
                      CompleteBipartiteSensitivity(m, total_order),
                      "all parts edgeless", acc.TakeTrace());
  }
  if (m > total_alpha) {
    return NotApplicable("cone_over_union",
                         "m = " + std::to_string(m) +
                             " > sum of alpha(H_i) = " +
                             std::to_string(total_alpha));
  }
  const ExtNat min_sigma = acc.min();
  if (m == 1) {
    return Applicable("cone_over_union", min_sigma, "m=1", acc.TakeTrace());
  }
  const int r = total_alpha + 1;
  acc.Add("min_of_max(alpha+1,m)", m, MinOfMax(r, m));
  return Applicable("cone_over_union", acc.min(),
                    m <= r / 2 ? "m<=floor((alpha+1)/2)"
                               : "m>floor((alpha+1)/2)",
                    acc.TakeTrace());
}

}  // namespace graphsens
