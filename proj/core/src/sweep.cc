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

#include "graphsens/sweep.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphsens/parallel.h"
#include "graphsens/sensitivity.h"
#include "graphsens/verify.h"

namespace graphsens {
namespace {

constexpr long long kMaxSweepRows = 100000;

void ValidateRanges(const Expr& pattern, std::span<const SweepRange> ranges) {
  if (ranges.empty() || ranges.size() > 2) {
    throw std::invalid_argument("a sweep takes one or two ranges");
  }
  std::vector<std::string> free = FreeVariables(pattern);
  std::vector<std::string> named;
  long long rows = 1;
  for (const SweepRange& r : ranges) {
    if (r.lo > r.hi) {
      throw std::invalid_argument("empty range for '" + r.var + "'");
    }
    if (std::find(named.begin(), named.end(), r.var) != named.end()) {
      throw std::invalid_argument("variable '" + r.var + "' ranged twice");
    }
    named.push_back(r.var);
    rows *= static_cast<long long>(r.hi) - r.lo + 1;
  }
  std::sort(free.begin(), free.end());
  std::sort(named.begin(), named.end());
  if (free != named) {
    std::string want;
    for (const std::string& v : free) want += (want.empty() ? "" : ", ") + v;
    throw std::invalid_argument("ranges must cover exactly the variables {" +
                                want + "}");
  }
  if (rows > kMaxSweepRows) {
    throw std::invalid_argument("sweep has more than " +
                                std::to_string(kMaxSweepRows) + " rows");
  }
}

void Evaluate(const Expr& pattern, const SweepOptions& options, SweepRow& row) {
  Bindings bindings;
  for (const auto& [var, value] : row.params) bindings[var] = value;
  Graph g;
  try {
    g = BuildExpr(pattern, bindings, options.max_vertices);
  } catch (const BudgetExceeded& e) {
    row.skipped = true;
    row.skip_reason = e.what();
    return;
  } catch (const std::invalid_argument& e) {
    row.skipped = true;
    row.skip_reason = e.what();
    return;
  }
  row.order = g.order();
  row.delta = MaxDegree(g);
  row.alpha = IndependenceNumber(g);
  row.sigma = Sensitivity(g);
  if (auto p = PrimaryPrediction(pattern, bindings, g, options.max_vertices)) {
    row.sigma_pred = p->value;
    row.pred_source = p->predictor;
  }
  row.agree = row.sigma_pred && *row.sigma_pred == row.sigma;
}

}  // namespace

std::string_view TrendName(Trend trend) {
  switch (trend) {
    case Trend::kSigmaGrows:
      return "sigma-grows";
    case Trend::kSigmaBounded:
      return "sigma-bounded";
    case Trend::kDeltaBounded:
      return "delta-bounded";
  }
  return "";
}

Trend SeriesTrend(std::span<const SweepRow> series) {
  if (series.empty() || series.back().delta <= series.front().delta) {
    return Trend::kDeltaBounded;
  }
  std::vector<ExtNat> finite;
  for (const SweepRow& r : series) {
    if (r.sigma.is_finite()) finite.push_back(r.sigma);
  }
  if (finite.size() >= 2 && finite.back() > finite.front()) {
    return Trend::kSigmaGrows;
  }
  return Trend::kSigmaBounded;
}

std::vector<SweepRow> Sweep(const Expr& pattern,
                            std::span<const SweepRange> ranges,
                            const SweepOptions& options) {
  ValidateRanges(pattern, ranges);
  std::vector<SweepRow> rows;
  const SweepRange& outer = ranges[0];
  for (int a = outer.lo; a <= outer.hi; ++a) {
    if (ranges.size() == 1) {
      rows.emplace_back().params = {{outer.var, a}};
      continue;
    }
    for (int b = ranges[1].lo; b <= ranges[1].hi; ++b) {
      rows.emplace_back().params = {{outer.var, a}, {ranges[1].var, b}};
    }
  }

  ParallelFor(rows.size(), options.threads,
              [&](std::size_t i) { Evaluate(pattern, options, rows[i]); });

  // Series share all parameters but the last, so they are contiguous.
  std::size_t begin = 0;
  while (begin < rows.size()) {
    std::size_t end = begin + 1;
    auto same_series = [&](const SweepRow& x, const SweepRow& y) {
      return std::equal(x.params.begin(), x.params.end() - 1,
                        y.params.begin());
    };
    while (end < rows.size() && same_series(rows[begin], rows[end])) ++end;
    std::vector<SweepRow> evaluated;
    for (std::size_t i = begin; i < end; ++i) {
      if (!rows[i].skipped) evaluated.push_back(rows[i]);
    }
    const Trend trend = SeriesTrend(evaluated);
    for (std::size_t i = begin; i < end; ++i) {
      if (!rows[i].skipped) rows[i].trend = trend;
    }
    begin = end;
  }
  return rows;
}

}  // namespace graphsens
