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

// Graph operations: join, n-cone, generalized join, lexicographic product,
// repeated join, rooted product and corona.
//
// Vertex numbering is fixed so that witnesses and golden files are stable:
//   Join(G1, G2)            G1's vertices, then G2's.
//   Cone(n, G)              the n apex vertices, then G's.
//   GeneralizedJoin(G, Hs)  H_0's vertices, then H_1's, ...
//   RootedProduct(G, Hs)    G's vertices, then the non-root vertices of H_0
//                           in ascending order, then those of H_1, ...
//   Corona(G, H)            G's vertices, then the copy of H hung on vertex
//                           0, then the copy on vertex 1, ...

#ifndef GRAPHSENS_CONSTRUCTIONS_H_
#define GRAPHSENS_CONSTRUCTIONS_H_

#include <span>
#include <vector>

#include "graphsens/graph.h"

namespace graphsens {

struct RootedGraph {
  Graph graph;
  int root = 0;
};

// Throws std::invalid_argument unless root < |V|.
RootedGraph MakeRooted(Graph graph, int root);

// G1 ∨ G2. Throws std::invalid_argument on a zero-vertex operand.
Graph Join(const Graph& g1, const Graph& g2);

// K̄_n ∨ G. Throws std::invalid_argument for n < 1.
Graph Cone(int n, const Graph& g);

// G[H_1, ..., H_n]. Throws std::invalid_argument if the number of parts
// differs from |V_G| or any part has zero vertices.
Graph GeneralizedJoin(const Graph& base, std::span<const Graph> parts);

// G ∘ H = G[H, ..., H].
Graph Lexicographic(const Graph& base, const Graph& h);

// G ∨ ... ∨ G with t copies. Throws std::invalid_argument for t < 2.
Graph RepeatedJoin(const Graph& g, int t);

// G(H_1, ..., H_n): the root of H_i is merged with vertex i of G.
Graph RootedProduct(const Graph& base, std::span<const RootedGraph> attachments);

// Labels, inside RootedProduct(base, attachments), of the vertices of
// attachment i; entry r is the label of H_i's vertex r.
std::vector<int> RootedProductLabels(const Graph& base,
                                     std::span<const RootedGraph> attachments,
                                     int i);

// G ⊙ H. A zero-vertex H yields G. Throws std::invalid_argument on a
// zero-vertex G.
Graph Corona(const Graph& g, const Graph& h);

}  // namespace graphsens

#endif  // GRAPHSENS_CONSTRUCTIONS_H_
