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

#include <vector>

#include <gtest/gtest.h>

namespace graphsens {
namespace {

const Graph kP3 = MakeGraph(3, {{0, 1}, {1, 2}});

TEST(ConstructionsTest, JoinAddsAllCrossEdges) {
  const Graph g = Join(kP3, EmptyGraph(2));
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.EdgeCount(), 2 + 6);
  EXPECT_TRUE(g.HasEdge(0, 3));
  EXPECT_FALSE(g.HasEdge(3, 4));
  EXPECT_EQ(Join(EmptyGraph(1), EmptyGraph(1)), CompleteGraph(2));
  EXPECT_THROW(Join(EmptyGraph(0), kP3), std::invalid_argument);
}

TEST(ConstructionsTest, ConePutsApexesFirst) {
  const Graph g = Cone(2, kP3);
  EXPECT_EQ(g, Join(EmptyGraph(2), kP3));
  EXPECT_FALSE(g.HasEdge(0, 1));
  EXPECT_THROW(Cone(0, kP3), std::invalid_argument);
}

TEST(ConstructionsTest, GeneralizedJoinOverCompleteIsIteratedJoin) {
  const std::vector<Graph> parts = {EmptyGraph(1), EmptyGraph(2), EmptyGraph(3)};
  const Graph g = GeneralizedJoin(CompleteGraph(3), parts);
  EXPECT_EQ(g, Join(Join(EmptyGraph(1), EmptyGraph(2)), EmptyGraph(3)));
  EXPECT_THROW(GeneralizedJoin(CompleteGraph(2), parts), std::invalid_argument);
}

TEST(ConstructionsTest, GeneralizedJoinFollowsBaseEdgesOnly) {
  const std::vector<Graph> parts = {CompleteGraph(2), EmptyGraph(1), EmptyGraph(2)};
  const Graph g = GeneralizedJoin(kP3, parts);
  // Parts at labels {0,1}, {2}, {3,4}; base edges 0-1 and 1-2.
  EXPECT_TRUE(g.HasEdge(0, 1));
  EXPECT_TRUE(g.HasEdge(0, 2));
  EXPECT_TRUE(g.HasEdge(2, 4));
  EXPECT_FALSE(g.HasEdge(0, 3));
  EXPECT_EQ(g.EdgeCount(), 1 + 2 + 2);
}

TEST(ConstructionsTest, LexicographicProduct) {
  const Graph g = Lexicographic(kP3, CompleteGraph(2));
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.EdgeCount(), 3 + 2 * 4);
}

TEST(ConstructionsTest, RepeatedJoin) {
  EXPECT_EQ(RepeatedJoin(EmptyGraph(1), 4), CompleteGraph(4));
  EXPECT_EQ(RepeatedJoin(kP3, 2), Join(kP3, kP3));
  EXPECT_THROW(RepeatedJoin(kP3, 1), std::invalid_argument);
}

TEST(ConstructionsTest, RootedProductNumbering) {
  const std::vector<RootedGraph> hs = {MakeRooted(kP3, 0), MakeRooted(EmptyGraph(1), 0),
                                       MakeRooted(kP3, 1)};
  const Graph g = RootedProduct(kP3, hs);
  EXPECT_EQ(g.order(), 3 + 2 + 0 + 2);
  EXPECT_EQ(RootedProductLabels(kP3, hs, 0), (std::vector<int>{0, 3, 4}));
  EXPECT_EQ(RootedProductLabels(kP3, hs, 2), (std::vector<int>{5, 2, 6}));
  EXPECT_TRUE(g.HasEdge(0, 3));
  EXPECT_TRUE(g.HasEdge(3, 4));
  EXPECT_TRUE(g.HasEdge(2, 5));
  EXPECT_TRUE(g.HasEdge(2, 6));
  EXPECT_THROW(MakeRooted(kP3, 3), std::invalid_argument);
}

TEST(ConstructionsTest, CoronaHangsACopyOnEachVertex) {
  const Graph g = Corona(CompleteGraph(2), EmptyGraph(2));
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}));
  EXPECT_EQ(Corona(kP3, EmptyGraph(0)), kP3);
}

}  // namespace
}  // namespace graphsens
