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

// Closed-form sensitivity of graph constructions, computed from the
// engine's alpha and sigma_k of the components. Each predictor reports
// whether its hypotheses hold, which case of the formula fired, and the
// intermediate terms it minimized over, so a disagreement with the engine
// can be traced to a single term.

#ifndef GRAPHSENS_PREDICTORS_H_
#define GRAPHSENS_PREDICTORS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphsens/ext_nat.h"
#include "graphsens/graph.h"

namespace graphsens {

// One term of a minimum. `name` is "b" or "c" for the indexed join terms
// (with their index j), or names a standalone term such as "sigma(G1)".
struct TraceTerm {
  std::string name;
  int j = 0;
  ExtNat value;

  friend bool operator==(const TraceTerm&, const TraceTerm&) = default;
};

struct Prediction {
  std::string predictor;
  bool applicable = false;
  // Present iff applicable.
  std::optional<ExtNat> value;
  // The value only bounds sigma from above instead of giving it exactly.
  bool upper_bound = false;
  std::string case_label;
  // Why the predictor does not apply.
  std::string reason;
  std::vector<TraceTerm> trace;
};

// min_{1<=j<=s} max{j, r-j}: r-s when s <= floor(r/2), else ceil(r/2).
// Throws std::invalid_argument unless r, s >= 1.
int MinOfMax(int r, int s);

// sigma(K̄_m ∨ K̄_n) for any m, n >= 1 (the order of the parts is free).
int CompleteBipartiteSensitivity(int m, int n);

// sigma(G1 ∨ G2) from sigma(G1), alpha_1, alpha_2 and the k-sensitivities of
// G2, after reordering so that alpha(G1) >= alpha(G2). When |V2| equals
// alpha_1 both case formulas are evaluated and must agree.
Prediction PredictJoin(const Graph& g1, const Graph& g2);

// sigma(G ∨ ... ∨ G) = min{sigma(G), ceil((alpha(G)+1)/2)} for t >= 2.
Prediction PredictRepeatedJoin(const Graph& g, int t);

// sigma(G ∨ K_n): sigma(G) for G with an edge, m for G = K̄_m.
Prediction PredictJoinComplete(const Graph& g, int n);

// sigma(K̄_n ∨ G) by comparing n with alpha(G) and |V_G|. The trace holds
// every c_j = max{j, n+1-j+sigma_{j-alpha}(G)} that was minimized.
// n = 1 is delegated to PredictJoinComplete. Throws for n < 1.
Prediction PredictNCone(int n, const Graph& g);

// sigma(K̄_m ∨ G) = m - n + d + 1 for G d-regular on n vertices, provided
// m >= 2n - d - 1. Not applicable otherwise.
Prediction PredictNConeRegular(int m, const Graph& g);

// sigma of the complete multipartite graph with the given part sizes: only
// the two largest parts matter.
Prediction PredictMultipartite(std::span<const int> part_sizes);

// sigma_k(nG) = sigma_{ceil(k/n)}(G) for G with an edge and
// 1 <= k <= n(|V_G| - alpha(G)).
Prediction PredictKSensCopies(const Graph& g, int copies, int k);

// sigma(H_1 + ... + H_m) = min sigma(H_i).
Prediction PredictParallel(std::span<const Graph> parts);

// sigma(G ⊙ H): sigma(H) for H with an edge, |V_H| for H = K̄_n.
Prediction PredictCorona(const Graph& g, const Graph& h);

// sigma(K̄_m ∨ (H_1 + ... + H_n)) in the regime m <= sum alpha(H_i), and
// for all m when every H_i is edgeless. Not applicable otherwise.
Prediction PredictConeOverUnion(int m, std::span<const Graph> parts);

}  // namespace graphsens

#endif  // GRAPHSENS_PREDICTORS_H_
