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

#include "graphsens/constructions.h"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphsens {
namespace {

std::vector<int> Range(int begin, int count) {
  std::vector<int> out(count);
  std::iota(out.begin(), out.end(), begin);
  return out;
}

void RequireVertices(const Graph& g, const char* what) {
  if (g.order() == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": operand has zero vertices");
  }
}

}  // namespace

RootedGraph MakeRooted(Graph graph, int root) {
  if (root < 0 || root >= graph.order()) {
    throw std::invalid_argument("root " + std::to_string(root) +
                                " outside the graph");
  }
  return RootedGraph{std::move(graph), root};
}

Graph Join(const Graph& g1, const Graph& g2) {
  RequireVertices(g1, "join");
  RequireVertices(g2, "join");
  GraphBuilder builder(g1.order() + g2.order());
  builder.AddGraphAt(g1, 0).AddGraphAt(g2, g1.order());
  builder.AddBiclique(Range(0, g1.order()), Range(g1.order(), g2.order()));
  return std::move(builder).Build();
}

Graph Cone(int n, const Graph& g) {
  if (n < 1) throw std::invalid_argument("cone needs at least one apex");
  return Join(EmptyGraph(n), g);
}

Graph GeneralizedJoin(const Graph& base, std::span<const Graph> parts) {
  if (static_cast<int>(parts.size()) != base.order()) {
    throw std::invalid_argument(
        "generalized join: " + std::to_string(parts.size()) +
        " parts for a base graph on " + std::to_string(base.order()) +
        " vertices");
  }
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].order() == 0) {
      throw std::invalid_argument("generalized join: part " +
                                  std::to_string(i) + " has zero vertices");
    }
    offset[i + 1] = offset[i] + parts[i].order();
  }
  GraphBuilder builder(offset.back());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    builder.AddGraphAt(parts[i], offset[i]);
  }
  for (auto [u, v] : base.Edges()) {
    builder.AddBiclique(Range(offset[u], parts[u].order()),
                        Range(offset[v], parts[v].order()));
  }
  return std::move(builder).Build();
}

Graph Lexicographic(const Graph& base, const Graph& h) {
  RequireVertices(base, "lexicographic product");
  RequireVertices(h, "lexicographic product");
  std::vector<Graph> parts(base.order(), h);
  return GeneralizedJoin(base, parts);
}

Graph RepeatedJoin(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("repeated join needs t >= 2");
  return Lexicographic(CompleteGraph(t), g);
}

std::vector<int> RootedProductLabels(const Graph& base,
                                     std::span<const RootedGraph> attachments,
                                     int i) {
  int next = base.order();
  for (int j = 0; j < i; ++j) next += attachments[j].graph.order() - 1;
  const RootedGraph& h = attachments[i];
  std::vector<int> labels(h.graph.order());
  for (int r = 0; r < h.graph.order(); ++r) {
    labels[r] = (r == h.root) ? i : next++;
  }
  return labels;
}

Graph RootedProduct(const Graph& base,
                    std::span<const RootedGraph> attachments) {
  if (static_cast<int>(attachments.size()) != base.order()) {
    throw std::invalid_argument(
        "rooted product: " + std::to_string(attachments.size()) +
        " attachments for a base graph on " + std::to_string(base.order()) +
        " vertices");
  }
  int total = base.order();
  for (const RootedGraph& h : attachments) {
    if (h.root < 0 || h.root >= h.graph.order()) {
      throw std::invalid_argument("rooted product: root outside attachment");
    }
    total += h.graph.order() - 1;
  }
  GraphBuilder builder(total);
  builder.AddGraphAt(base, 0);
  for (int i = 0; i < base.order(); ++i) {
    const std::vector<int> labels = RootedProductLabels(base, attachments, i);
    for (auto [u, v] : attachments[i].graph.Edges()) {
      builder.AddEdge(labels[u], labels[v]);
    }
  }
  return std::move(builder).Build();
}

Graph Corona(const Graph& g, const Graph& h) {
  RequireVertices(g, "corona");
  const int copy = h.order();
  GraphBuilder builder(g.order() * (1 + copy));
  builder.AddGraphAt(g, 0);
  for (int v = 0; v < g.order(); ++v) {
    const int offset = g.order() + v * copy;
    builder.AddGraphAt(h, offset);
    const int base_vertex[] = {v};
    builder.AddBiclique(base_vertex, Range(offset, copy));
  }
  return std::move(builder).Build();
}

}  // namespace graphsens
