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


#include "graphsens/ext_nat.h"

#include <sstream>

#include <gtest/gtest.h>

namespace graphsens {
namespace {

TEST(ExtNatTest, InfinityIsAboveEveryFiniteValue) {
  const ExtNat inf = ExtNat::Infinity();
  EXPECT_LT(ExtNat(0), inf);
  EXPECT_LT(ExtNat(1 << 30), inf);
  EXPECT_EQ(inf, ExtNat::Infinity());
  EXPECT_NE(ExtNat(3), inf);
}

TEST(ExtNatTest, AdditionSaturates) {
  EXPECT_EQ(ExtNat(2) + ExtNat(3), ExtNat(5));
  EXPECT_EQ(ExtNat(2) + ExtNat::Infinity(), ExtNat::Infinity());
  EXPECT_EQ(ExtNat::Infinity() + ExtNat::Infinity(), ExtNat::Infinity());
}

TEST(ExtNatTest, MinAndMax) {
  EXPECT_EQ(Min(ExtNat(4), ExtNat::Infinity()), ExtNat(4));
  EXPECT_EQ(Max(ExtNat(4), ExtNat::Infinity()), ExtNat::Infinity());
  EXPECT_EQ(Min(ExtNat(4), ExtNat(2)), ExtNat(2));
}

TEST(ExtNatTest, RendersInfinityLiterally) {
  std::ostringstream os;
  os << ExtNat(7) << " " << ExtNat::Infinity();
  EXPECT_EQ(os.str(), "7 inf");
}

TEST(ExtNatTest, RejectsNegativeValuesAndFiniteAccessOnInfinity) {
  EXPECT_THROW(ExtNat(-1), std::invalid_argument);
  EXPECT_THROW(ExtNat::Infinity().value(), std::logic_error);
}

}  // namespace
}  // namespace graphsens
