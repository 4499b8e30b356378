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

#include "graphsens/graph.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <string>

namespace graphsens {
namespace {

void CheckVertex(int v, int order, const char* what) {
  if (v < 0 || v >= order) {
    throw std::out_of_range(std::string(what) + ": vertex " +
                            std::to_string(v) + " not in [0, " +
                            std::to_string(order) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int parent_size)
    : parent_size_(parent_size), words_(WordsFor(parent_size), 0) {
  if (parent_size < 0) throw std::invalid_argument("negative parent size");
}

VertexSet::VertexSet(int parent_size, std::initializer_list<int> members)
    : VertexSet(parent_size) {
  for (int v : members) Insert(v);
}

VertexSet VertexSet::FromMembers(int parent_size,
                                 std::span<const int> members) {
  VertexSet set(parent_size);
  for (int v : members) set.Insert(v);
  return set;
}

VertexSet VertexSet::All(int parent_size) {
  return VertexSet(parent_size).Complement();
}

VertexSet VertexSet::FromWords(int parent_size,
                               std::vector<std::uint64_t> words) {
  VertexSet set(parent_size);
  if (words.size() != set.words_.size()) {
    throw std::invalid_argument("word count does not match parent size");
  }
  set.words_ = std::move(words);
  if (parent_size % 64 != 0 && !set.words_.empty()) {
    set.words_.back() &= (std::uint64_t{1} << (parent_size % 64)) - 1;
  }
  return set;
}

int VertexSet::size() const {
  int count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool VertexSet::Contains(int v) const {
  if (v < 0 || v >= parent_size_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1;
}

void VertexSet::Insert(int v) {
  CheckVertex(v, parent_size_, "VertexSet::Insert");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::Erase(int v) {
  CheckVertex(v, parent_size_, "VertexSet::Erase");
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<int> VertexSet::Members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
    }
  }
  return out;
}

VertexSet VertexSet::Complement() const {
  std::vector<std::uint64_t> words(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words[i] = ~words_[i];
  return FromWords(parent_size_, std::move(words));
}

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  CheckSameParent(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  CheckSameParent(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  CheckSameParent(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  CheckSameParent(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

void VertexSet::CheckSameParent(const VertexSet& other) const {
  if (parent_size_ != other.parent_size_) {
    throw std::invalid_argument("vertex sets belong to different graphs");
  }
}

std::string ToString(const VertexSet& set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : set.Members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Graph

int Graph::EdgeCount() const {
  int twice = 0;
  for (std::uint64_t w : rows_) twice += std::popcount(w);
  return twice / 2;
}

bool Graph::HasEdge(int u, int v) const {
  CheckVertex(u, order_, "Graph::HasEdge");
  CheckVertex(v, order_, "Graph::HasEdge");
  return (rows_[static_cast<std::size_t>(u) * words_per_row_ + (v >> 6)] >>
          (v & 63)) &
         1;
}

int Graph::Degree(int v) const {
  int count = 0;
  for (std::uint64_t w : Row(v)) count += std::popcount(w);
  return count;
}

int Graph::DegreeIn(int v, const VertexSet& set) const {
  if (set.parent_size() != order_) {
    throw std::invalid_argument("vertex set does not belong to this graph");
  }
  auto row = Row(v);
  auto words = set.words();
  int count = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    count += std::popcount(row[i] & words[i]);
  }
  return count;
}

VertexSet Graph::Neighbors(int v) const {
  auto row = Row(v);
  return VertexSet::FromWords(order_, {row.begin(), row.end()});
}

std::span<const std::uint64_t> Graph::Row(int v) const {
  CheckVertex(v, order_, "Graph::Row");
  return std::span<const std::uint64_t>(rows_).subspan(
      static_cast<std::size_t>(v) * words_per_row_, words_per_row_);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  for (int u = 0; u < order_; ++u) {
    for (int v : Neighbors(u).Members()) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(int order) {
  if (order < 0) throw std::invalid_argument("negative vertex count");
  graph_.order_ = order;
  graph_.words_per_row_ = WordsFor(order);
  graph_.rows_.assign(
      static_cast<std::size_t>(order) * graph_.words_per_row_, 0);
}

GraphBuilder& GraphBuilder::AddEdge(int u, int v) {
  CheckVertex(u, graph_.order_, "AddEdge");
  CheckVertex(v, graph_.order_, "AddEdge");
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  const std::size_t w = graph_.words_per_row_;
  graph_.rows_[u * w + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  graph_.rows_[v * w + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  return *this;
}

GraphBuilder& GraphBuilder::AddBiclique(std::span<const int> a,
                                        std::span<const int> b) {
  for (int u : a) {
    for (int v : b) {
      if (u != v) AddEdge(u, v);
    }
  }
  return *this;
}

GraphBuilder& GraphBuilder::AddGraphAt(const Graph& g, int offset) {
  for (auto [u, v] : g.Edges()) AddEdge(u + offset, v + offset);
  return *this;
}

Graph GraphBuilder::Build() const& { return GraphBuilder(*this).Build(); }

Graph GraphBuilder::Build() && {
  const Graph& g = graph_;
  for (int v = 0; v < g.order_; ++v) {
    if (g.HasEdge(v, v)) throw std::logic_error("graph has a self-loop");
    for (int u : g.Neighbors(v).Members()) {
      if (!g.HasEdge(u, v)) throw std::logic_error("asymmetric adjacency");
    }
  }
  return std::move(graph_);
}

// ---------------------------------------------------------------------------
// Free functions

Graph MakeGraph(int order, std::span<const Edge> edges) {
  GraphBuilder builder(order);
  for (auto [u, v] : edges) builder.AddEdge(u, v);
  return std::move(builder).Build();
}

Graph MakeGraph(int order, std::initializer_list<Edge> edges) {
  return MakeGraph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph EmptyGraph(int order) { return GraphBuilder(order).Build(); }

Graph CompleteGraph(int order) {
  GraphBuilder builder(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) builder.AddEdge(u, v);
  }
  return std::move(builder).Build();
}

Graph InducedSubgraph(const Graph& g, const VertexSet& subset) {
  if (subset.parent_size() != g.order()) {
    throw std::out_of_range("vertex set does not belong to this graph");
  }
  const std::vector<int> members = subset.Members();
  std::vector<int> label(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    label[members[i]] = static_cast<int>(i);
  }
  GraphBuilder builder(static_cast<int>(members.size()));
  for (int u : members) {
    for (int v : (g.Neighbors(u) & subset).Members()) {
      if (u < v) builder.AddEdge(label[u], label[v]);
    }
  }
  return std::move(builder).Build();
}

int Degree(const Graph& g, int v) { return g.Degree(v); }

int MaxDegree(const Graph& g) {
  if (g.order() == 0) {
    throw std::invalid_argument("max degree of a zero-vertex graph");
  }
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.Degree(v));
  return best;
}

int MaxDegreeIn(const Graph& g, const VertexSet& subset) {
  int best = 0;
  for (int v : subset.Members()) best = std::max(best, g.DegreeIn(v, subset));
  return best;
}

std::optional<int> IsRegular(const Graph& g) {
  if (g.order() == 0) {
    throw std::invalid_argument("regularity of a zero-vertex graph");
  }
  const int d = g.Degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.Degree(v) != d) return std::nullopt;
  }
  return d;
}

Graph DisjointUnion(std::span<const Graph> parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint union of nothing");
  int total = 0;
  for (const Graph& part : parts) total += part.order();
  GraphBuilder builder(total);
  int offset = 0;
  for (const Graph& part : parts) {
    builder.AddGraphAt(part, offset);
    offset += part.order();
  }
  return std::move(builder).Build();
}

Graph DisjointUnion(std::initializer_list<Graph> parts) {
  return DisjointUnion(std::span<const Graph>(parts.begin(), parts.size()));
}

int IdentifiedLabel(int g1_order, int v1, int v2, int v) {
  if (v == v2) return v1;
  return g1_order + (v < v2 ? v : v - 1);
}

Graph IdentifyVertices(const Graph& g1, int v1, const Graph& g2, int v2) {
  CheckVertex(v1, g1.order(), "IdentifyVertices");
  CheckVertex(v2, g2.order(), "IdentifyVertices");
  GraphBuilder builder(g1.order() + g2.order() - 1);
  builder.AddGraphAt(g1, 0);
  for (auto [u, v] : g2.Edges()) {
    builder.AddEdge(IdentifiedLabel(g1.order(), v1, v2, u),
                    IdentifiedLabel(g1.order(), v1, v2, v));
  }
  return std::move(builder).Build();
}

}  // namespace graphsens
