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


// Randomized properties over seeded samples. Each failure message carries
// the sample index, which with the fixed seed reproduces the case.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "graphsens/constructions.h"
#include "graphsens/expr.h"
#include "graphsens/predictors.h"
#include "graphsens/sensitivity.h"
#include "sampler.h"

namespace graphsens {
namespace {

using test_support::GraphSampler;

Graph Relabel(const Graph& g, const std::vector<int>& perm) {
  GraphBuilder b(g.order());
  for (const auto& [u, v] : g.Edges()) b.AddEdge(perm[u], perm[v]);
  return std::move(b).Build();
}

TEST(PropertyTest, SigmaKIsNondecreasingAndBoundedByDelta) {
  GraphSampler sampler(0x5eed1001);
  for (int i = 0; i < 80; ++i) {
    const Graph g = sampler.SampleWithEdge(2, 12);
    const SensitivityProfile p = Profile(g);
    ASSERT_TRUE(std::is_sorted(p.sigma_k.begin(), p.sigma_k.end())) << i;
    EXPECT_GE(p.sigma_k.front(), 1);
    EXPECT_LE(p.sigma_k.front(), MaxDegree(g)) << i;
    EXPECT_EQ(p.sigma_k.back(), MaxDegree(g)) << i;
  }
}

TEST(PropertyTest, SensitivityIsALabelInvariant) {
  GraphSampler sampler(0x5eed1002);
  for (int i = 0; i < 60; ++i) {
    const Graph g = sampler.Sample(1, 12);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), sampler.rng());
    const Graph h = Relabel(g, perm);
    EXPECT_EQ(Profile(g).sigma_k, Profile(h).sigma_k) << i;
    EXPECT_EQ(IndependenceNumber(g), IndependenceNumber(h)) << i;
  }
}

TEST(PropertyTest, JoinPredictionMatchesEngine) {
  GraphSampler sampler(0x5eed1003);
  for (int i = 0; i < 80; ++i) {
    const Graph g1 = sampler.Sample(1, 6);
    const Graph g2 = sampler.Sample(1, 6);
    const Prediction p = PredictJoin(g1, g2);
    ASSERT_TRUE(p.applicable);
    EXPECT_EQ(*p.value, Sensitivity(Join(g1, g2))) << i << " " << p.case_label;
  }
}

TEST(PropertyTest, NConePredictionMatchesEngine) {
  GraphSampler sampler(0x5eed1004);
  for (int i = 0; i < 40; ++i) {
    const Graph g = sampler.Sample(1, 6);
    const int n = sampler.Uniform(1, 9);
    const Prediction p = PredictNCone(n, g);
    EXPECT_EQ(*p.value, Sensitivity(Cone(n, g))) << i << " " << p.case_label;
  }
}

TEST(PropertyTest, CoronaEqualsSingleApexCone) {
  GraphSampler sampler(0x5eed1005);
  for (int i = 0; i < 30; ++i) {
    const Graph g = sampler.Sample(1, 4);
    const Graph h = sampler.Sample(1, 4);
    EXPECT_EQ(Sensitivity(Corona(g, h)), Sensitivity(Cone(1, h))) << i;
  }
}

// Random well-formed expression text over a few families and combinators.
std::string RandomExpr(GraphSampler& s, int depth) {
  const int n = s.Uniform(1, 3);
  if (depth == 0) {
    switch (s.Uniform(0, 3)) {
      case 0: return "path(" + std::to_string(n) + ")";
      case 1: return "complete(" + std::to_string(n) + ")";
      case 2: return "empty(" + std::to_string(n) + ")";
      default: return "cycle(" + std::to_string(n + 2) + ")";
    }
  }
  const std::string a = RandomExpr(s, depth - 1);
  const std::string b = RandomExpr(s, s.Uniform(0, depth - 1));
  switch (s.Uniform(0, 5)) {
    case 0: return "join(" + a + "," + b + ")";
    case 1: return "cone( " + std::to_string(n) + " , " + a + ")";
    case 2: return "union(" + a + ",  " + b + ")";
    case 3: return "corona(" + a + "," + b + ")";
    case 4: return "copies(" + std::to_string(n) + "," + a + ")";
    default: return "lex(" + a + "," + b + ")";
  }
}

TEST(PropertyTest, PrinterIsAParserFixpoint) {
  GraphSampler sampler(0x5eed1006);
  for (int i = 0; i < 200; ++i) {
    const std::string text = RandomExpr(sampler, sampler.Uniform(0, 3));
    const ExprPtr e = ParseExpr(text);
    const std::string canonical = ToString(*e);
    EXPECT_EQ(ToString(*ParseExpr(canonical)), canonical) << text;
    EXPECT_EQ(ParseExpr(text)->args.size(), e->args.size());
  }
}

TEST(PropertyTest, ExprOrderMatchesBuiltGraph) {
  GraphSampler sampler(0x5eed1007);
  for (int i = 0; i < 100; ++i) {
    const ExprPtr e = ParseExpr(RandomExpr(sampler, sampler.Uniform(0, 2)));
    const long long order = ExprOrder(*e);
    if (order > 200) continue;
    EXPECT_EQ(BuildExpr(*e, {}, 200).order(), order) << ToString(*e);
  }
}

}  // namespace
}  // namespace graphsens
