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

#include "graphsens/sensitivity.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace graphsens {
namespace {

// Fixed-width vertex mask. W is 1, 2 or 4 words.
template <std::size_t W>
struct Mask {
  std::array<std::uint64_t, W> w{};

  bool Test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
  void Set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void Reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int Count() const {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
  }
  bool Any() const {
    for (std::uint64_t x : w) {
      if (x) return true;
    }
    return false;
  }
  int First() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
    }
    return -1;
  }
  int CountAnd(const Mask& o) const {
    int c = 0;
    for (std::size_t i = 0; i < W; ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  Mask operator&(const Mask& o) const {
    Mask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Mask operator|(const Mask& o) const {
    Mask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Mask AndNot(const Mask& o) const {
    Mask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  template <class F>
  void ForEach(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      for (std::uint64_t x = w[i]; x != 0; x &= x - 1) {
        f(static_cast<int>(i * 64) + std::countr_zero(x));
      }
    }
  }
};

template <std::size_t W>
Mask<W> ToMask(const VertexSet& set) {
  Mask<W> m;
  auto words = set.words();
  for (std::size_t i = 0; i < words.size(); ++i) m.w[i] = words[i];
  return m;
}

template <std::size_t W>
VertexSet ToVertexSet(const Mask<W>& m, int order) {
  std::vector<std::uint64_t> words(WordsFor(order));
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = m.w[i];
  return VertexSet::FromWords(order, std::move(words));
}

// Largest S with Delta(G[S]) <= d. The search keeps a set of chosen vertices
// (feasible by construction) and a set of candidates that can still be added
// to it one at a time without breaking the degree bound.
template <std::size_t W>
class BoundedDegreeSearch {
 public:
  BoundedDegreeSearch(const Graph& g, int d) : order_(g.order()), d_(d) {
    adj_.resize(order_);
    for (int v = 0; v < order_; ++v) {
      auto row = g.Row(v);
      for (std::size_t i = 0; i < row.size(); ++i) adj_[v].w[i] = row[i];
    }
  }

  // Starts from a known feasible set of `incumbent_size` vertices and stops
  // early once a set of `stop_at` vertices is found.
  void Run(const Mask<W>& incumbent, int stop_at) {
    best_ = incumbent;
    best_size_ = incumbent.Count();
    stop_at_ = stop_at;
    Mask<W> all;
    for (int v = 0; v < order_; ++v) all.Set(v);
    Recurse(Mask<W>{}, all);
  }

  int best_size() const { return best_size_; }
  const Mask<W>& best() const { return best_; }

 private:
  void Recurse(const Mask<W>& chosen, Mask<W> cand) {
    if (best_size_ >= stop_at_) return;

    // A chosen vertex with d chosen neighbors is saturated: none of its
    // neighbors can join. A candidate with more than d chosen neighbors
    // cannot join either.
    Mask<W> blocked;
    chosen.ForEach([&](int u) {
      if (adj_[u].CountAnd(chosen) == d_) blocked = blocked | adj_[u];
    });
    cand = cand.AndNot(blocked);
    cand.ForEach([&](int v) {
      if (adj_[v].CountAnd(chosen) > d_) cand.Reset(v);
    });

    const int chosen_count = chosen.Count();
    const int cand_count = cand.Count();
    if (chosen_count + cand_count <= best_size_) return;

    const Mask<W> pool = chosen | cand;
    int max_degree = 0;
    int branch_vertex = -1;
    int branch_degree = -1;
    pool.ForEach([&](int v) {
      const int deg = adj_[v].CountAnd(pool);
      max_degree = std::max(max_degree, deg);
      if (cand.Test(v) && deg > branch_degree) {
        branch_degree = deg;
        branch_vertex = v;
      }
    });
    if (max_degree <= d_) {
      best_size_ = chosen_count + cand_count;
      best_ = pool;
      return;
    }

    if (chosen_count + CliqueCoverBound(cand) <= best_size_) return;

    Mask<W> with = chosen;
    with.Set(branch_vertex);
    Mask<W> rest = cand;
    rest.Reset(branch_vertex);
    Recurse(with, rest);
    Recurse(chosen, rest);
  }

  // A clique contributes at most d + 1 vertices to a set of max degree d.
  // Greedily partition the candidates into cliques and sum those caps.
  int CliqueCoverBound(Mask<W> remaining) const {
    int bound = 0;
    while (remaining.Any()) {
      int v = remaining.First();
      remaining.Reset(v);
      int clique_size = 1;
      Mask<W> common = remaining & adj_[v];
      while (common.Any()) {
        int u = common.First();
        remaining.Reset(u);
        common.Reset(u);
        common = common & adj_[u];
        ++clique_size;
      }
      bound += std::min(clique_size, d_ + 1);
    }
    return bound;
  }

  int order_;
  int d_;
  std::vector<Mask<W>> adj_;
  Mask<W> best_;
  int best_size_ = 0;
  int stop_at_ = std::numeric_limits<int>::max();
};

template <class F>
decltype(auto) WithMaskWidth(int order, F&& f) {
  if (order <= 64) return f(std::integral_constant<std::size_t, 1>{});
  if (order <= 128) return f(std::integral_constant<std::size_t, 2>{});
  if (order <= kMaxEngineOrder) {
    return f(std::integral_constant<std::size_t, 4>{});
  }
  throw std::invalid_argument("graph has " + std::to_string(order) +
                              " vertices; the engine supports at most " +
                              std::to_string(kMaxEngineOrder));
}

template <std::size_t W>
Mask<W> Singleton(int order) {
  Mask<W> m;
  if (order > 0) m.Set(0);
  return m;
}

// Runs the search for d with a starting incumbent, returning the best set.
template <std::size_t W>
Mask<W> SolveWidth(const Graph& g, int d, const Mask<W>& incumbent,
                   int stop_at) {
  BoundedDegreeSearch<W> search(g, d);
  search.Run(incumbent, stop_at);
  return search.best();
}

void CheckNonEmpty(const Graph& g, const char* what) {
  if (g.order() == 0) {
    throw std::invalid_argument(std::string(what) + " of a zero-vertex graph");
  }
}

}  // namespace

ExtNat SensitivityProfile::At(int k, int order) const {
  if (k <= 0) return 0;
  if (sigma_k.empty()) {
    if (k <= order) return ExtNat::Infinity();
  } else if (k <= static_cast<int>(sigma_k.size())) {
    return sigma_k[k - 1];
  }
  throw std::invalid_argument("k-sensitivity undefined for k = " +
                              std::to_string(k));
}

BoundedDegreeResult MaxBoundedDegreeSubset(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("negative degree bound");
  return WithMaskWidth(g.order(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    Mask<W> best = SolveWidth<W>(g, d, Singleton<W>(g.order()),
                                 std::numeric_limits<int>::max());
    BoundedDegreeResult result;
    result.witness.subset = ToVertexSet(best, g.order());
    result.size = result.witness.subset.size();
    result.witness.achieved_max_degree =
        MaxDegreeIn(g, result.witness.subset);
    return result;
  });
}

int IndependenceNumber(const Graph& g) {
  return MaxBoundedDegreeSubset(g, 0).size;
}

ExtNat KSensitivity(const Graph& g, int k) {
  if (k <= 0) return 0;
  const int n = g.order();
  if (g.IsEdgeless()) {
    if (k <= n) return ExtNat::Infinity();
    throw std::invalid_argument("k-sensitivity undefined for k = " +
                                std::to_string(k) + " on an edgeless graph");
  }
  return WithMaskWidth(n, [&](auto width) -> ExtNat {
    constexpr std::size_t W = decltype(width)::value;
    const Mask<W> independent = SolveWidth<W>(
        g, 0, Singleton<W>(n), std::numeric_limits<int>::max());
    const int alpha = independent.Count();
    if (k > n - alpha) {
      throw std::invalid_argument(
          "k-sensitivity undefined for k = " + std::to_string(k) +
          " > |V| - alpha = " + std::to_string(n - alpha));
    }
    const int target = alpha + k;
    Mask<W> incumbent = independent;
    for (int d = 1;; ++d) {
      incumbent = SolveWidth<W>(g, d, incumbent, target);
      if (incumbent.Count() >= target) return d;
    }
  });
}

ExtNat Sensitivity(const Graph& g) {
  CheckNonEmpty(g, "sensitivity");
  return KSensitivity(g, 1);
}

SensitivityProfile Profile(const Graph& g) {
  CheckNonEmpty(g, "sensitivity profile");
  const int n = g.order();
  return WithMaskWidth(n, [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    SensitivityProfile profile;
    Mask<W> incumbent = SolveWidth<W>(g, 0, Singleton<W>(n),
                                      std::numeric_limits<int>::max());
    profile.alpha = incumbent.Count();
    if (profile.alpha == n) return profile;

    // size(d) is non-decreasing in d, so each search starts from the
    // previous optimum.
    int k = 1;
    for (int d = 1; k <= n - profile.alpha; ++d) {
      incumbent = SolveWidth<W>(g, d, incumbent, n);
      const int size = incumbent.Count();
      while (k <= n - profile.alpha && profile.alpha + k <= size) {
        profile.sigma_k.push_back(d);
        ++k;
      }
    }
    profile.sigma = profile.sigma_k.front();
    return profile;
  });
}

// ---------------------------------------------------------------------------
// Oracle. Plain 64-bit enumeration with no pruning.

namespace {

std::vector<std::uint64_t> OracleRows(const Graph& g, int limit) {
  if (g.order() > limit || g.order() > 63) {
    throw std::invalid_argument(
        "graph has " + std::to_string(g.order()) +
        " vertices, above the oracle limit of " + std::to_string(limit));
  }
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (g.HasEdge(u, v)) rows[u] |= std::uint64_t{1} << v;
    }
  }
  return rows;
}

int MaxDegreeOfMask(const std::vector<std::uint64_t>& rows,
                    std::uint64_t mask) {
  int best = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    best = std::max(best, std::popcount(rows[std::countr_zero(m)] & mask));
  }
  return best;
}

int OracleAlpha(const std::vector<std::uint64_t>& rows) {
  const int n = static_cast<int>(rows.size());
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) > best && MaxDegreeOfMask(rows, mask) == 0) {
      best = std::popcount(mask);
    }
  }
  return best;
}

}  // namespace

int OracleIndependenceNumber(const Graph& g, int limit) {
  return OracleAlpha(OracleRows(g, limit));
}

ExtNat OracleKSensitivity(const Graph& g, int k, int limit) {
  const auto rows = OracleRows(g, limit);
  const int n = g.order();
  if (k <= 0) return 0;
  bool edgeless = true;
  for (std::uint64_t r : rows) edgeless = edgeless && r == 0;
  if (edgeless) {
    if (k <= n) return ExtNat::Infinity();
    throw std::invalid_argument("k-sensitivity undefined on edgeless graph");
  }
  const int alpha = OracleAlpha(rows);
  if (k > n - alpha) {
    throw std::invalid_argument("k-sensitivity undefined for k = " +
                                std::to_string(k));
  }
  // Gosper's hack over all masks with exactly alpha + k bits.
  const int size = alpha + k;
  const std::uint64_t limit_mask = std::uint64_t{1} << n;
  int best = std::numeric_limits<int>::max();
  for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask < limit_mask;) {
    best = std::min(best, MaxDegreeOfMask(rows, mask));
    const std::uint64_t c = mask & -mask;
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return best;
}

}  // namespace graphsens
