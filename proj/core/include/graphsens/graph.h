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

// Immutable simple undirected graphs stored as adjacency bit rows, plus the
// vertex subsets used to describe induced subgraphs.

#ifndef GRAPHSENS_GRAPH_H_
#define GRAPHSENS_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphsens {

using Edge = std::pair<int, int>;

inline int WordsFor(int bits) { return (bits + 63) / 64; }

// A subset of the vertices {0, ..., parent_size - 1} of some graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int parent_size);
  // Throws std::out_of_range if a member is not below parent_size.
  VertexSet(int parent_size, std::initializer_list<int> members);
  static VertexSet FromMembers(int parent_size, std::span<const int> members);
  static VertexSet All(int parent_size);
  static VertexSet FromWords(int parent_size,
                             std::vector<std::uint64_t> words);

  int parent_size() const { return parent_size_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool Contains(int v) const;
  void Insert(int v);
  void Erase(int v);

  // Members in ascending order.
  std::vector<int> Members() const;
  VertexSet Complement() const;
  bool IsSubsetOf(const VertexSet& other) const;

  std::span<const std::uint64_t> words() const { return words_; }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void CheckSameParent(const VertexSet& other) const;

  int parent_size_ = 0;
  std::vector<std::uint64_t> words_;
};

std::string ToString(const VertexSet& set);

// Vertices are 0..order()-1. The adjacency relation is symmetric and
// loop-free; every constructor path goes through GraphBuilder::Build, which
// checks both. Equality is labeled equality, not isomorphism.
class Graph {
 public:
  Graph() = default;

  int order() const { return order_; }
  int EdgeCount() const;
  bool HasEdge(int u, int v) const;
  int Degree(int v) const;
  // Number of neighbors of v inside `set`.
  int DegreeIn(int v, const VertexSet& set) const;
  VertexSet Neighbors(int v) const;
  std::span<const std::uint64_t> Row(int v) const;
  // Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> Edges() const;
  // True when there are no edges, i.e. g is some K̄_n. A graph with zero
  // vertices is edgeless too.
  bool IsEdgeless() const { return EdgeCount() == 0; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  int order_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Accumulates edges and produces a validated Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);
  // Duplicate edges collapse. Throws std::invalid_argument on a self-loop
  // and std::out_of_range on an endpoint outside [0, order).
  GraphBuilder& AddEdge(int u, int v);
  // Adds all edges between distinct members of `a` and members of `b`.
  GraphBuilder& AddBiclique(std::span<const int> a, std::span<const int> b);
  // Copies g's edges onto the vertex block starting at `offset`.
  GraphBuilder& AddGraphAt(const Graph& g, int offset);
  int order() const { return graph_.order_; }
  Graph Build() &&;
  Graph Build() const&;

 private:
  Graph graph_;
};

Graph MakeGraph(int order, std::span<const Edge> edges);
Graph MakeGraph(int order, std::initializer_list<Edge> edges);

// K̄_n: n vertices, no edges.
Graph EmptyGraph(int order);
// K_n.
Graph CompleteGraph(int order);

// G[S], relabeled 0..|S|-1 in ascending original order.
Graph InducedSubgraph(const Graph& g, const VertexSet& subset);

int Degree(const Graph& g, int v);
// Throws std::invalid_argument on a zero-vertex graph.
int MaxDegree(const Graph& g);
// Maximum degree of G[S] measured inside S; 0 for an empty S.
int MaxDegreeIn(const Graph& g, const VertexSet& subset);
// The common degree when g is regular, std::nullopt otherwise.
// Throws std::invalid_argument on a zero-vertex graph.
std::optional<int> IsRegular(const Graph& g);

// Parts are laid out in order: part i occupies a contiguous block following
// part i-1. Throws std::invalid_argument on an empty list.
Graph DisjointUnion(std::span<const Graph> parts);
Graph DisjointUnion(std::initializer_list<Graph> parts);

// (G1 + G2) / {v1, v2}. G1's vertices keep their labels and the merged vertex
// is v1; G2's remaining vertices follow in ascending order.
Graph IdentifyVertices(const Graph& g1, int v1, const Graph& g2, int v2);

// Label of G2's vertex `v` inside IdentifyVertices(g1, v1, g2, v2).
int IdentifiedLabel(int g1_order, int v1, int v2, int v);

}  // namespace graphsens

#endif  // GRAPHSENS_GRAPH_H_
