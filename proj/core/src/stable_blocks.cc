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

#include "graphsens/stable_blocks.h"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphsens/sensitivity.h"

namespace graphsens {
namespace {

void RequireProperBlock(const Graph& g, const VertexSet& s) {
  if (s.parent_size() != g.order()) {
    throw std::invalid_argument("vertex set belongs to a graph on " +
                                std::to_string(s.parent_size()) +
                                " vertices, not " +
                                std::to_string(g.order()));
  }
  if (s.empty()) throw std::invalid_argument("block must be nonempty");
  if (s.size() == g.order()) {
    throw std::invalid_argument("block must be a proper subset of V");
  }
}

// Sensitivity of G[s] with the convention that the graph on no vertices
// (an empty interior) counts as edgeless.
ExtNat InducedSensitivity(const Graph& g, const VertexSet& s) {
  if (s.empty()) return ExtNat::Infinity();
  return Sensitivity(InducedSubgraph(g, s));
}

int InducedAlpha(const Graph& g, const VertexSet& s) {
  if (s.empty()) return 0;
  return IndependenceNumber(InducedSubgraph(g, s));
}

// Exhaustive branch and bound over independent sets for the lexicographic
// maximum of (criticality, cardinality). Graphs fit one 64-bit word.
class CriticalSearch {
 public:
  explicit CriticalSearch(const Graph& g) : n_(g.order()), adj_(n_) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.Row(v)[0];
  }

  std::uint64_t Run() {
    const std::uint64_t all = n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
    Recurse(0, 0, all);
    return best_set_;
  }

 private:
  // `chosen` is independent, `covered` = N(chosen), `candidates` are the
  // vertices still addable (outside chosen ∪ covered, not yet excluded).
  void Recurse(std::uint64_t chosen, std::uint64_t covered,
               std::uint64_t candidates) {
    const int size = std::popcount(chosen);
    const int crit = size - std::popcount(covered);
    if (crit > best_crit_ || (crit == best_crit_ && size > best_size_)) {
      best_crit_ = crit;
      best_size_ = size;
      best_set_ = chosen;
    }
    if (candidates == 0) return;
    // Each further vertex adds at most one to both coordinates.
    const int extra = std::popcount(candidates);
    if (crit + extra < best_crit_ ||
        (crit + extra == best_crit_ && size + extra <= best_size_)) {
      return;
    }
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = 1ULL << v;
    Recurse(chosen | bit, covered | adj_[v], candidates & ~bit & ~adj_[v]);
    Recurse(chosen, covered, candidates & ~bit);
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  int best_crit_ = 0;
  int best_size_ = 0;
  std::uint64_t best_set_ = 0;
};

}  // namespace

VertexSet Border(const Graph& g, const VertexSet& s) {
  RequireProperBlock(g, s);
  const VertexSet outside = s.Complement();
  VertexSet border(g.order());
  for (int v : s.Members()) {
    if (g.DegreeIn(v, outside) > 0) border.Insert(v);
  }
  return border;
}

VertexSet Interior(const Graph& g, const VertexSet& s) {
  return s - Border(g, s);
}

BlockReport IsStableBlock(const Graph& g, const VertexSet& s) {
  BlockReport report;
  report.block = s;
  report.border = Border(g, s);
  report.interior = s - report.border;
  report.is_stable = InducedAlpha(g, s) == InducedAlpha(g, report.interior);
  report.interior_sigma = InducedSensitivity(g, report.interior);
  return report;
}

ExtNat BlockSensitivityBound(const Graph& g, const VertexSet& s) {
  const BlockReport report = IsStableBlock(g, s);
  if (!report.is_stable) {
    throw std::invalid_argument(ToString(s) + " is not a stable block");
  }
  if (report.interior_sigma.is_infinite()) {
    throw std::invalid_argument("interior of " + ToString(s) +
                                " induces an edgeless graph");
  }
  return report.interior_sigma;
}

VertexSet Neighborhood(const Graph& g, const VertexSet& set) {
  VertexSet out(g.order());
  for (int v : set.Members()) out |= g.Neighbors(v);
  return out;
}

int Criticality(const Graph& g, const VertexSet& independent) {
  if (independent.parent_size() != g.order()) {
    throw std::invalid_argument("vertex set belongs to another graph");
  }
  const VertexSet n = Neighborhood(g, independent);
  if (!(n & independent).empty()) {
    throw std::invalid_argument(ToString(independent) + " is not independent");
  }
  return independent.size() - n.size();
}

CriticalSetReport MaximumCriticalIndependentSet(const Graph& g, int limit) {
  if (limit > 64) limit = 64;
  if (g.order() > limit) {
    throw std::invalid_argument(
        "critical independent set search is limited to " +
        std::to_string(limit) + " vertices; got " +
        std::to_string(g.order()));
  }
  CriticalSetReport report;
  report.set = VertexSet(g.order());
  if (g.order() > 0) {
    const std::uint64_t best = CriticalSearch(g).Run();
    report.set = VertexSet::FromWords(g.order(), {best});
  }
  report.criticality = Criticality(g, report.set);
  report.is_maximum_critical = true;
  return report;
}

CriticalBlockResult CriticalStableBlock(const Graph& g, int limit) {
  CriticalBlockResult result;
  result.critical = MaximumCriticalIndependentSet(g, limit);
  result.closure = result.critical.set | Neighborhood(g, result.critical.set);
  if (result.critical.set.empty()) {
    result.reason = "the maximum critical independent set is empty";
  } else if (result.closure.size() == g.order()) {
    result.reason = "I_c ∪ N(I_c) is the whole vertex set";
  } else {
    result.block = IsStableBlock(g, result.closure);
  }
  return result;
}

Prediction PartitionSensitivity(const Graph& g,
                                std::span<const VertexSet> partition) {
  VertexSet seen(g.order());
  for (const VertexSet& part : partition) {
    if (part.parent_size() != g.order()) {
      throw std::invalid_argument("partition part belongs to another graph");
    }
    if (part.empty()) throw std::invalid_argument("partition has an empty part");
    if (!(seen & part).empty()) {
      throw std::invalid_argument("partition parts overlap");
    }
    seen |= part;
  }
  if (seen.size() != g.order()) {
    throw std::invalid_argument("partition does not cover every vertex");
  }

  Prediction p;
  p.predictor = "stable_block_partition";
  ExtNat min = ExtNat::Infinity();
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const VertexSet& part = partition[i];
    if (part.size() == g.order() || !IsStableBlock(g, part).is_stable) {
      p.reason = "part " + std::to_string(i) + " " + ToString(part) +
                 " is not a stable block";
      p.trace.clear();
      return p;
    }
    const ExtNat s = InducedSensitivity(g, part);
    p.trace.push_back(TraceTerm{"sigma(G[V_i])", static_cast<int>(i), s});
    min = Min(min, s);
  }
  p.applicable = true;
  p.value = min;
  p.case_label = "all parts stable";
  return p;
}

std::vector<VertexSet> CoronaPartition(int g_order, int h_order) {
  const int n = g_order * (1 + h_order);
  std::vector<VertexSet> parts;
  for (int v = 0; v < g_order; ++v) {
    VertexSet part(n);
    part.Insert(v);
    const int offset = g_order + v * h_order;
    for (int u = 0; u < h_order; ++u) part.Insert(offset + u);
    parts.push_back(std::move(part));
  }
  return parts;
}

RootedProductBoundReport RootedProductBound(
    const Graph& base, std::span<const RootedGraph> attachments) {
  const Graph product = RootedProduct(base, attachments);
  RootedProductBoundReport report;
  for (int i = 0; i < base.order(); ++i) {
    const RootedGraph& h = attachments[i];
    AttachmentCheck check;
    check.index = i;
    if (h.graph.order() == 1) {
      check.trivial = true;
      check.reason = "K_1 attachment";
      report.checks.push_back(check);
      continue;
    }
    VertexSet without_root = VertexSet::All(h.graph.order());
    without_root.Erase(h.root);
    check.root_avoidable =
        InducedAlpha(h.graph, without_root) == IndependenceNumber(h.graph);

    const std::vector<int> labels = RootedProductLabels(base, attachments, i);
    const VertexSet block = VertexSet::FromMembers(product.order(), labels);
    if (block.size() == product.order()) {
      check.reason = "block is the whole product";
      report.checks.push_back(check);
      continue;
    }
    const VertexSet interior = Interior(product, block);
    const ExtNat s = InducedSensitivity(product, interior);
    check.interior_has_edge = s.is_finite();
    if (s.is_finite()) check.interior_sigma = s;

    if (!check.root_avoidable) {
      check.reason = "root lies in every maximum independent set";
    } else if (!check.interior_has_edge) {
      check.reason = "interior of the block has no edge";
    } else {
      report.bound = report.bound ? Min(*report.bound, s) : s;
    }
    report.checks.push_back(check);
  }
  return report;
}

VertexSet FixedIndependentSet(const Graph& block) {
  if (block.order() == 0) throw std::invalid_argument("empty block");
  return MaxBoundedDegreeSubset(block, 0).witness.subset;
}

StableBlockComposite BuildStableBlockComposite(
    const Graph& base, std::span<const Graph> blocks,
    std::span<const std::pair<BlockVertex, BlockVertex>> cross_edges) {
  if (static_cast<int>(blocks.size()) != base.order()) {
    throw std::invalid_argument("one block per base vertex is required");
  }
  StableBlockComposite out;
  std::vector<int> offset(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.fixed_independent.push_back(FixedIndependentSet(blocks[i]));
    offset[i + 1] = offset[i] + blocks[i].order();
  }
  const int n = offset.back();
  GraphBuilder builder(n);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    builder.AddGraphAt(blocks[i], offset[i]);
    VertexSet part(n);
    for (int v = offset[i]; v < offset[i + 1]; ++v) part.Insert(v);
    out.partition.push_back(std::move(part));
  }

  auto check_end = [&](const BlockVertex& e) {
    if (e.block < 0 || e.block >= base.order() || e.vertex < 0 ||
        e.vertex >= blocks[e.block].order()) {
      throw std::invalid_argument("cross edge endpoint out of range");
    }
    if (out.fixed_independent[e.block].Contains(e.vertex)) {
      throw std::invalid_argument(
          "cross edge endpoint lies in the fixed independent set of block " +
          std::to_string(e.block));
    }
  };
  GraphBuilder covered(base.order());
  for (const auto& [a, b] : cross_edges) {
    check_end(a);
    check_end(b);
    if (!base.HasEdge(a.block, b.block)) {
      throw std::invalid_argument("cross edge between blocks " +
                                  std::to_string(a.block) + " and " +
                                  std::to_string(b.block) +
                                  ", which are not adjacent in the base");
    }
    builder.AddEdge(offset[a.block] + a.vertex, offset[b.block] + b.vertex);
    covered.AddEdge(a.block, b.block);
  }
  const Graph covered_graph = std::move(covered).Build();
  for (auto [u, v] : base.Edges()) {
    const bool u_free = out.fixed_independent[u].size() < blocks[u].order();
    const bool v_free = out.fixed_independent[v].size() < blocks[v].order();
    if (u_free && v_free && !covered_graph.HasEdge(u, v)) {
      throw std::invalid_argument("base edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) +
                                  ") has no cross edge");
    }
  }
  out.graph = std::move(builder).Build();
  return out;
}

}  // namespace graphsens
