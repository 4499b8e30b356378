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

// Checks the engine's sigma of an expression against every predictor whose
// hypotheses match the shape of the expression tree.

#ifndef GRAPHSENS_VERIFY_H_
#define GRAPHSENS_VERIFY_H_

#include <optional>
#include <string>
#include <vector>

#include "graphsens/expr.h"
#include "graphsens/ext_nat.h"
#include "graphsens/graph.h"
#include "graphsens/predictors.h"
#include "graphsens/sensitivity.h"

namespace graphsens {

struct VerifyOptions {
  int max_vertices = kDefaultMaxVertices;
  int oracle_limit = kDefaultOracleLimit;
  // Also run the brute-force oracle (up to oracle_limit vertices) and the
  // critical-independent-set block bound.
  bool with_checks = true;
};

struct VerificationReport {
  std::string expression;
  int order = 0;
  int max_degree = 0;
  int alpha = 0;
  ExtNat sigma;
  std::vector<Prediction> predictions;
  // Every applicable prediction matches sigma (or bounds it, for bounds).
  bool agree = true;
};

// True when `p` does not apply, equals sigma, or is an upper bound that
// sigma respects.
bool Agrees(const Prediction& p, ExtNat sigma);

// All predictions for the expression; `g` is the graph it builds.
std::vector<Prediction> PredictionsFor(const Expr& expr,
                                       const Bindings& bindings,
                                       const Graph& g,
                                       const VerifyOptions& options);

// The first applicable exact prediction (without the generic checks).
std::optional<Prediction> PrimaryPrediction(const Expr& expr,
                                            const Bindings& bindings,
                                            const Graph& g,
                                            int max_vertices);

// Builds the graph, computes alpha and sigma and runs the predictors.
// Throws like BuildExpr.
VerificationReport Verify(const Expr& expr, const Bindings& bindings = {},
                          const VerifyOptions& options = {});

}  // namespace graphsens

#endif  // GRAPHSENS_VERIFY_H_
