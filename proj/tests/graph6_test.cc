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


#include "graphsens/graph6.h"

#include <string>

#include <gtest/gtest.h>

#include "graphsens/families.h"
#include "sampler.h"

namespace graphsens {
namespace {

TEST(Graph6Test, FixedVectors) {
  EXPECT_EQ(ReadGraph6("@"), EmptyGraph(1));
  EXPECT_EQ(ReadGraph6("Bw"), CompleteGraph(3));
  const Graph p3 = MakeGraph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(WriteGraph6(p3), "Bg");
  EXPECT_EQ(ReadGraph6("Bg"), p3);
  EXPECT_EQ(WriteGraph6(EmptyGraph(0)), "?");
}

TEST(Graph6Test, ToleratesHeaderPrefixAndNewline) {
  EXPECT_EQ(ReadGraph6(">>graph6<<Bw\n"), CompleteGraph(3));
}

TEST(Graph6Test, LongHeaderAboveSixtyTwoVertices) {
  const Graph g = BuildFamily("cycle", {{63}, {}});
  const std::string text = WriteGraph6(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(ReadGraph6(text), g);
  EXPECT_EQ(WriteGraph6(EmptyGraph(62))[0], static_cast<char>(62 + 63));
}

TEST(Graph6Test, RejectsMalformedInput) {
  EXPECT_THROW(ReadGraph6(""), Graph6Error);
  EXPECT_THROW(ReadGraph6("B "), Graph6Error);
  EXPECT_THROW(ReadGraph6("C"), Graph6Error);
  EXPECT_THROW(ReadGraph6("Bx"), Graph6Error);
  EXPECT_THROW(ReadGraph6("Bw?"), Graph6Error);
  EXPECT_THROW(ReadGraph6("~~??????"), Graph6Error);
  try {
    ReadGraph6("Bw\x7f");
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Graph6Test, RoundTripsSampledGraphs) {
  test_support::GraphSampler sampler(0x5eed0003);
  for (int i = 0; i < 200; ++i) {
    const Graph g = sampler.Sample(0, 70);
    ASSERT_EQ(ReadGraph6(WriteGraph6(g)), g) << i;
  }
}

}  // namespace
}  // namespace graphsens
