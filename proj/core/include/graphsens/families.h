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

// Named graph families and a catalog of their known sensitivities.
//
// Vertex numbering of the glued families (star apex first, then leaves):
//   dandelion(m, n)   star on 0..m, then path vertices 1..n-1 as m+1..m+n-1
//                     (path vertex 0 is the apex).
//   cycle_star(m, n)  cycle on 0..m-1, then the n leaves hung on vertex 0.
//   pineapple(m, n)   star on 0..m, then K_n vertices 1..n-1 (K_n vertex 0
//                     is the apex).
// hypercube(n) and hamming(n, q) number the tuples in base-q order with the
// first coordinate most significant.

#ifndef GRAPHSENS_FAMILIES_H_
#define GRAPHSENS_FAMILIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphsens/ext_nat.h"
#include "graphsens/graph.h"

namespace graphsens {

// Argument pattern: 'i' is an integer, 'g' a graph. A family takes `fixed`
// followed by one or more repetitions of `repeat` (when `repeat` is set).
struct Signature {
  std::string fixed;
  std::string repeat;

  bool Accepts(std::string_view kinds) const;
  std::string ToString() const;
};

struct FamilyInfo {
  std::string name;
  Signature signature;
  std::string description;
};

// All registered families, sorted by name.
const std::vector<FamilyInfo>& FamilyRegistry();
// nullptr if `name` is not registered.
const FamilyInfo* FindFamily(std::string_view name);

struct FamilyArgs {
  std::vector<int> ints;
  std::vector<Graph> graphs;
};

// Order of the family member without building it. Throws like BuildFamily.
long long FamilyOrder(std::string_view name, const FamilyArgs& args);

// Throws std::invalid_argument for an unknown name, a signature mismatch or
// parameters outside the family's range.
Graph BuildFamily(std::string_view name, const FamilyArgs& args);

struct ExpectedValue {
  ExtNat value;
  // The closed form that produced `value`, with its hypotheses.
  std::string formula;
};

// Known sensitivity of the family member, or nullopt where only bounds or
// nothing are known (including the small-parameter anomalies each entry
// excludes). Families parameterized by graphs evaluate the closed form on
// the engine's alpha and sigma of those graphs.
std::optional<ExpectedValue> ExpectedSensitivity(std::string_view name,
                                                 const FamilyArgs& args);

}  // namespace graphsens

#endif  // GRAPHSENS_FAMILIES_H_
