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


#include "graphsens/expr.h"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "graphsens/constructions.h"

namespace graphsens {
namespace {

TEST(ExprTest, ParsesNestedCalls) {
  const ExprPtr e = ParseExpr("corona(cycle(5), empty(3))");
  EXPECT_EQ(e->kind, ExprKind::kCorona);
  ASSERT_EQ(e->args.size(), 2u);
  EXPECT_EQ(e->args[0].graph->name, "cycle");
  EXPECT_EQ(e->args[0].graph->args[0].value, 5);
  EXPECT_EQ(e->args[1].graph->name, "empty");
}

TEST(ExprTest, ParsesConeWithIntegerFirst) {
  const ExprPtr e = ParseExpr("cone(4, cycle(6))");
  EXPECT_EQ(e->kind, ExprKind::kCone);
  EXPECT_EQ(e->args[0].kind, ExprArg::Kind::kInt);
  EXPECT_EQ(e->args[0].value, 4);
  EXPECT_EQ(e->args[1].graph->kind, ExprKind::kFamily);
}

TEST(ExprTest, UnbalancedParenthesisReportsEndOfInput) {
  const std::string text = "join(join(path(4), complete(3)";
  try {
    ParseExpr(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), text.size());
    EXPECT_NE(std::string(e.what()).find("unbalanced"), std::string::npos);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(ExprTest, ReportsUnknownNamesArityAndIntegers) {
  EXPECT_THROW(ParseExpr("frobnicate(3)"), ParseError);
  EXPECT_THROW(ParseExpr("join(path(3))"), ParseError);
  EXPECT_THROW(ParseExpr("cone(path(3), 2)"), ParseError);
  EXPECT_THROW(ParseExpr("path(3x)"), ParseError);
  EXPECT_THROW(ParseExpr("path(99999999999)"), ParseError);
  EXPECT_THROW(ParseExpr("path(3) extra"), ParseError);
  EXPECT_THROW(ParseExpr(""), ParseError);
  try {
    ParseExpr("join(path(3), zork(2))");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 14u);
  }
}

TEST(ExprTest, CanonicalTextIsAFixpoint) {
  const std::vector<std::string> inputs = {
      "corona( cycle(5),empty(3) )",
      "genjoin(path(3), empty(1), complete(2), cycle(4))",
      "rooted(path(2), cycle(3), 0, star(2), 1)",
      "identify(cycle(4),0,path(3),2)",
      "union(empty(1), join(path(2), copies(2, complete(3))))",
      "repjoin(lex(path(2), empty(2)), 3)",
      "windmill(m, 2)",
  };
  for (const std::string& in : inputs) {
    const std::string once = ToString(*ParseExpr(in));
    EXPECT_EQ(ToString(*ParseExpr(once)), once);
    EXPECT_EQ(once.find("  "), std::string::npos);
  }
  EXPECT_EQ(ToString(*ParseExpr("corona( cycle(5),empty(3) )")),
            "corona(cycle(5), empty(3))");
}

TEST(ExprTest, FreeVariablesInFirstAppearanceOrder) {
  const ExprPtr e = ParseExpr("join(cycle(n), windmill(m, n))");
  EXPECT_EQ(FreeVariables(*e), (std::vector<std::string>{"n", "m"}));
}

TEST(ExprTest, BuildsTheDenotedGraph) {
  const ExprPtr e = ParseExpr("cone(2, path(3))");
  const Graph g = BuildExpr(*e);
  EXPECT_EQ(g, Cone(2, MakeGraph(3, {{0, 1}, {1, 2}})));
  EXPECT_EQ(ExprOrder(*e), 5);
}

TEST(ExprTest, BindsVariables) {
  const ExprPtr e = ParseExpr("cycle(n)");
  EXPECT_EQ(BuildExpr(*e, {{"n", 6}}).order(), 6);
  EXPECT_THROW(BuildExpr(*e), std::invalid_argument);
}

TEST(ExprTest, EnforcesTheVertexBudget) {
  const ExprPtr e = ParseExpr("corona(complete(5), complete(5))");
  EXPECT_EQ(ExprOrder(*e), 30);
  try {
    BuildExpr(*e);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& b) {
    EXPECT_EQ(b.order(), 30);
  }
  EXPECT_EQ(BuildExpr(*e, {}, 30).order(), 30);
}

TEST(ExprTest, OrdersOfAllCombinators) {
  EXPECT_EQ(ExprOrder(*ParseExpr("copies(3, path(4))")), 12);
  EXPECT_EQ(ExprOrder(*ParseExpr("lex(cycle(4), path(3))")), 12);
  EXPECT_EQ(ExprOrder(*ParseExpr("repjoin(path(2), 4)")), 8);
  EXPECT_EQ(ExprOrder(*ParseExpr("identify(cycle(4), 0, path(3), 2)")), 6);
  EXPECT_EQ(ExprOrder(*ParseExpr("rooted(path(2), cycle(3), 0, star(2), 1)")), 6);
  EXPECT_EQ(ExprOrder(*ParseExpr("genjoin(path(2), empty(3), cycle(4))")), 7);
  EXPECT_EQ(ExprOrder(*ParseExpr("double(cycle(5))")), 10);
}

}  // namespace
}  // namespace graphsens
