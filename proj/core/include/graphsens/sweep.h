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

// Finite parameter sweeps over an expression with one or two free
// variables. The trend column describes the sampled range only: it is
// evidence about a family, never a proof of its asymptotic behavior.

#ifndef GRAPHSENS_SWEEP_H_
#define GRAPHSENS_SWEEP_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphsens/expr.h"
#include "graphsens/ext_nat.h"

namespace graphsens {

struct SweepRange {
  std::string var;
  int lo = 0;
  int hi = 0;
};

struct SweepOptions {
  int max_vertices = kDefaultMaxVertices;
  int threads = 1;
};

enum class Trend {
  // Delta and sigma both larger at the end of the series than at its start.
  kSigmaGrows,
  // Delta grows while sigma does not.
  kSigmaBounded,
  // Delta does not grow.
  kDeltaBounded,
};

// "sigma-grows", "sigma-bounded" or "delta-bounded".
std::string_view TrendName(Trend trend);

struct SweepRow {
  // Variable values in range order.
  std::vector<std::pair<std::string, int>> params;
  bool skipped = false;
  std::string skip_reason;
  int order = 0;
  int delta = 0;
  int alpha = 0;
  ExtNat sigma;
  std::optional<ExtNat> sigma_pred;
  // Predictor that supplied sigma_pred.
  std::string pred_source;
  // sigma_pred is present and equals sigma.
  bool agree = false;
  // Trend of the row's series: rows sharing every variable but the last.
  std::optional<Trend> trend;
};

// Label of a series of evaluated rows, in parameter order. Rows with an
// infinite sigma take no part in the sigma comparison.
Trend SeriesTrend(std::span<const SweepRow> series);

// One row per assignment in lexicographic order of the ranges (first range
// outermost). Rows above the vertex budget or with invalid parameters are
// marked skipped. Throws std::invalid_argument unless the ranges name each
// free variable of `pattern` exactly once, there are one or two of them, and
// every lo <= hi.
std::vector<SweepRow> Sweep(const Expr& pattern,
                            std::span<const SweepRange> ranges,
                            const SweepOptions& options = {});

}  // namespace graphsens

#endif  // GRAPHSENS_SWEEP_H_
