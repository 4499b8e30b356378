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

#include <vector>

#include <gtest/gtest.h>

namespace graphsens {
namespace {

TEST(VertexSetTest, MembersAndComplement) {
  const VertexSet s(70, {0, 3, 65});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.Contains(65));
  EXPECT_FALSE(s.Contains(64));
  EXPECT_EQ(s.Members(), (std::vector<int>{0, 3, 65}));
  EXPECT_EQ(s.Complement().size(), 67);
  EXPECT_EQ((s | s.Complement()), VertexSet::All(70));
  EXPECT_TRUE((s & s.Complement()).empty());
  EXPECT_EQ(ToString(s), "{0,3,65}");
}

TEST(VertexSetTest, RejectsOutOfRangeAndMixedParents) {
  EXPECT_THROW(VertexSet(4, {4}), std::out_of_range);
  VertexSet a(4);
  EXPECT_THROW(a |= VertexSet(5), std::invalid_argument);
}

TEST(GraphTest, BuilderValidatesAndCollapsesDuplicates) {
  GraphBuilder b(3);
  b.AddEdge(0, 1).AddEdge(1, 0).AddEdge(1, 2);
  const Graph g = std::move(b).Build();
  EXPECT_EQ(g.EdgeCount(), 2);
  EXPECT_TRUE(g.HasEdge(1, 0));
  EXPECT_FALSE(g.HasEdge(0, 2));
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

  GraphBuilder bad(3);
  EXPECT_THROW(bad.AddEdge(1, 1), std::invalid_argument);
  EXPECT_THROW(bad.AddEdge(0, 3), std::out_of_range);
}

TEST(GraphTest, DegreesAndRegularity) {
  const Graph c4 = MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(MaxDegree(c4), 2);
  EXPECT_EQ(IsRegular(c4), 2);
  const Graph p3 = MakeGraph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(IsRegular(p3), std::nullopt);
  EXPECT_EQ(p3.DegreeIn(1, VertexSet(3, {0})), 1);
  EXPECT_EQ(MaxDegreeIn(p3, VertexSet(3, {0, 2})), 0);
  EXPECT_THROW(MaxDegree(EmptyGraph(0)), std::invalid_argument);
}

TEST(GraphTest, InducedSubgraphRelabelsInOrder) {
  const Graph k4 = CompleteGraph(4);
  const Graph sub = InducedSubgraph(k4, VertexSet(4, {1, 3}));
  EXPECT_EQ(sub, CompleteGraph(2));
}

TEST(GraphTest, DisjointUnionLaysOutPartsInOrder) {
  const Graph u = DisjointUnion({CompleteGraph(2), EmptyGraph(1), CompleteGraph(2)});
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.Edges(), (std::vector<Edge>{{0, 1}, {3, 4}}));
}

TEST(GraphTest, IdentifyVerticesMergesIntoFirstOperand) {
  const Graph p3 = MakeGraph(3, {{0, 1}, {1, 2}});
  // Merge the end of one P3 with the center of another.
  const Graph g = IdentifyVertices(p3, 2, p3, 1);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.Degree(2), 3);
  EXPECT_EQ(IdentifiedLabel(3, 2, 1, 1), 2);
  EXPECT_EQ(IdentifiedLabel(3, 2, 1, 0), 3);
  EXPECT_EQ(IdentifiedLabel(3, 2, 1, 2), 4);
  EXPECT_TRUE(g.HasEdge(2, 3));
  EXPECT_TRUE(g.HasEdge(2, 4));
}

TEST(GraphTest, WideGraphsSpanSeveralWords) {
  GraphBuilder b(130);
  b.AddEdge(0, 129).AddEdge(64, 65);
  const Graph g = std::move(b).Build();
  EXPECT_TRUE(g.HasEdge(129, 0));
  EXPECT_EQ(g.Neighbors(0).Members(), (std::vector<int>{129}));
  EXPECT_EQ(MaxDegree(g), 1);
}

}  // namespace
}  // namespace graphsens
