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

// Stable blocks: vertex sets S whose independence number is already attained
// inside their interior (the part of S with no neighbors outside S). A stable
// block with an edge in its interior bounds sigma(G) from above, and a
// partition of V into stable blocks determines sigma(G) exactly.

#ifndef GRAPHSENS_STABLE_BLOCKS_H_
#define GRAPHSENS_STABLE_BLOCKS_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphsens/constructions.h"
#include "graphsens/ext_nat.h"
#include "graphsens/graph.h"
#include "graphsens/predictors.h"

namespace graphsens {

inline constexpr int kDefaultCriticalSearchLimit = 24;

struct BlockReport {
  VertexSet block;
  VertexSet border;
  VertexSet interior;
  bool is_stable = false;
  // sigma(G[interior]); infinite when the interior has no edges (including
  // an empty interior).
  ExtNat interior_sigma;
};

struct CriticalSetReport {
  VertexSet set;
  // |I| - |N(I)|.
  int criticality = 0;
  bool is_maximum_critical = false;
};

// Border and interior of S. Both throw std::invalid_argument unless S is a
// nonempty proper subset of V.
VertexSet Border(const Graph& g, const VertexSet& s);
VertexSet Interior(const Graph& g, const VertexSet& s);

// Full stable-block report for S (same preconditions as Border).
BlockReport IsStableBlock(const Graph& g, const VertexSet& s);

// sigma(G[int S]), an upper bound for sigma(G). Throws std::invalid_argument
// if S is not a stable block or its interior has no edges.
ExtNat BlockSensitivityBound(const Graph& g, const VertexSet& s);

// N(I) = union of the neighborhoods of the members of I.
VertexSet Neighborhood(const Graph& g, const VertexSet& set);

// |I| - |N(I)|. Throws std::invalid_argument if I is not independent.
int Criticality(const Graph& g, const VertexSet& independent);

// An independent set of maximum criticality, and among those of maximum
// cardinality. Exact search; throws std::invalid_argument above `limit`
// vertices.
CriticalSetReport MaximumCriticalIndependentSet(
    const Graph& g, int limit = kDefaultCriticalSearchLimit);

struct CriticalBlockResult {
  CriticalSetReport critical;
  // I_c ∪ N(I_c).
  VertexSet closure;
  // Present when I_c is nonempty and the closure is a proper subset.
  std::optional<BlockReport> block;
  // Why `block` is absent.
  std::string reason;
};

// Stable block I_c ∪ N(I_c) built from a maximum critical independent set.
CriticalBlockResult CriticalStableBlock(
    const Graph& g, int limit = kDefaultCriticalSearchLimit);

// min sigma(G[V_i]) when every part is a stable block; not applicable
// otherwise, with the first offending part named in the reason. Throws
// std::invalid_argument if the parts do not partition V.
Prediction PartitionSensitivity(const Graph& g,
                                std::span<const VertexSet> partition);

// Parts of the natural partition of a corona G ⊙ H into the copies of
// K_1 ∨ H, using the numbering of Corona().
std::vector<VertexSet> CoronaPartition(int g_order, int h_order);

struct AttachmentCheck {
  int index = 0;
  // H_i = K_1; such attachments take no part in the bound.
  bool trivial = false;
  // alpha(H_i - root) = alpha(H_i): the root avoids some maximum
  // independent set.
  bool root_avoidable = false;
  // The interior of H_i's block in the product has an edge.
  bool interior_has_edge = false;
  // sigma of that interior, when it has an edge.
  std::optional<ExtNat> interior_sigma;
  std::string reason;

  bool qualifies() const {
    return !trivial && root_avoidable && interior_has_edge;
  }
};

struct RootedProductBoundReport {
  // Minimum interior sigma over the qualifying attachments; absent if none
  // qualify.
  std::optional<ExtNat> bound;
  std::vector<AttachmentCheck> checks;
};

// Upper bound for sigma(G(H_1, ..., H_n)) from the attachments whose root
// avoids a maximum independent set.
RootedProductBoundReport RootedProductBound(
    const Graph& base, std::span<const RootedGraph> attachments);

// A vertex of block `block` at local index `vertex`.
struct BlockVertex {
  int block = 0;
  int vertex = 0;
};

struct StableBlockComposite {
  Graph graph;
  // Block i occupies a contiguous label range, in order.
  std::vector<VertexSet> partition;
  // The maximum independent set fixed in each block, in local labels.
  std::vector<VertexSet> fixed_independent;
};

// The fixed maximum independent set used for `block` by
// BuildStableBlockComposite.
VertexSet FixedIndependentSet(const Graph& block);

// Disjoint union of `blocks` plus `cross_edges`. Each cross edge must join
// two blocks adjacent in `base`, avoiding the fixed independent set on both
// sides; every base edge whose two blocks both have vertices outside their
// fixed sets must receive at least one cross edge. The result partitions
// into stable blocks. Throws std::invalid_argument on a violation.
StableBlockComposite BuildStableBlockComposite(
    const Graph& base, std::span<const Graph> blocks,
    std::span<const std::pair<BlockVertex, BlockVertex>> cross_edges);

}  // namespace graphsens

#endif  // GRAPHSENS_STABLE_BLOCKS_H_
