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

// Exact independence number, sensitivity and k-sensitivity.
//
// Everything reduces to one primitive: the largest vertex subset S whose
// induced subgraph has maximum degree at most d. With d = 0 that is alpha(G).
// sigma_k(G) is the least d >= 1 for which that largest subset reaches
// alpha(G) + k vertices. The primitive is solved by branch and bound over
// include/exclude decisions on bit-row adjacency.
//
// OracleKSensitivity is an independent check that enumerates every subset of
// the required size; it shares no code with the branch and bound.

#ifndef GRAPHSENS_SENSITIVITY_H_
#define GRAPHSENS_SENSITIVITY_H_

#include <vector>

#include "graphsens/ext_nat.h"
#include "graphsens/graph.h"

namespace graphsens {

inline constexpr int kDefaultOracleLimit = 20;
// The branch and bound works on fixed-width masks of up to this many vertices.
inline constexpr int kMaxEngineOrder = 256;

struct SearchWitness {
  VertexSet subset;
  int achieved_max_degree = 0;
};

struct BoundedDegreeResult {
  int size = 0;
  SearchWitness witness;
};

struct SensitivityProfile {
  int alpha = 0;
  // Infinite iff the graph is edgeless.
  ExtNat sigma = ExtNat::Infinity();
  // sigma_k for k = 1..|V| - alpha; empty for edgeless graphs.
  std::vector<int> sigma_k;

  // sigma_k with the conventions for k <= 0 and for edgeless graphs.
  // Throws std::invalid_argument where sigma_k is undefined.
  ExtNat At(int k, int order) const;
};

// max{|S| : Delta(G[S]) <= d} with a witness attaining it. Throws
// std::invalid_argument for d < 0 or graphs above kMaxEngineOrder.
BoundedDegreeResult MaxBoundedDegreeSubset(const Graph& g, int d);

// alpha(G); 0 for the zero-vertex graph.
int IndependenceNumber(const Graph& g);

// 0 for k <= 0; infinity for edgeless G and 1 <= k <= |V|; otherwise the
// least d >= 1 with an (alpha + k)-vertex induced subgraph of max degree d.
// Throws std::invalid_argument when k exceeds the defined range.
ExtNat KSensitivity(const Graph& g, int k);

// sigma(G) = sigma_1(G). Throws std::invalid_argument on zero vertices.
ExtNat Sensitivity(const Graph& g);

// alpha and the full sigma_k vector from one ascending sweep over d.
// Throws std::invalid_argument on zero vertices.
SensitivityProfile Profile(const Graph& g);

// Brute-force alpha(G) over all 2^n subsets.
int OracleIndependenceNumber(const Graph& g, int limit = kDefaultOracleLimit);

// Same contract as KSensitivity, by exhaustive enumeration of all subsets of
// size alpha + k. Throws std::invalid_argument above `limit` vertices.
ExtNat OracleKSensitivity(const Graph& g, int k,
                          int limit = kDefaultOracleLimit);

}  // namespace graphsens

#endif  // GRAPHSENS_SENSITIVITY_H_
