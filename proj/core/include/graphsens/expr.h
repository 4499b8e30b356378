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

// The construction language used on the command line:
//
//   expr := ident '(' arg (',' arg)* ')'
//   arg  := expr | integer | ident
//
// Whitespace is ignored. An identifier followed by '(' names a family or a
// combinator; a bare identifier is a variable, bound at build time (sweeps
// use these). Combinators:
//
//   join(G, H)              G ∨ H
//   cone(n, G)              K̄_n ∨ G
//   union(G, ...)           disjoint union
//   copies(n, G)            nG
//   genjoin(B, H_1, ...)    B[H_1, ..., H_n]
//   lex(B, H)               B ∘ H
//   corona(G, H)            G ⊙ H
//   rooted(B, H_1, r_1, ...) rooted product, H_i rooted at r_i
//   identify(G, u, H, v)    G and H with u and v merged
//   repjoin(G, t)           G ∨ ... ∨ G, t copies

#ifndef GRAPHSENS_EXPR_H_
#define GRAPHSENS_EXPR_H_

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphsens/families.h"
#include "graphsens/graph.h"

namespace graphsens {

inline constexpr int kDefaultMaxVertices = 26;

enum class ExprKind {
  kFamily,
  kJoin,
  kCone,
  kUnion,
  kCopies,
  kGenJoin,
  kLex,
  kCorona,
  kRooted,
  kIdentify,
  kRepJoin,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ExprArg {
  enum class Kind { kInt, kVar, kGraph };

  Kind kind = Kind::kInt;
  int value = 0;
  std::string var;
  ExprPtr graph;
  // Byte offset of the argument in the parsed text.
  std::size_t offset = 0;
};

struct Expr {
  ExprKind kind = ExprKind::kFamily;
  std::string name;
  std::vector<ExprArg> args;
  std::size_t offset = 0;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, std::string message,
             std::vector<std::string> expected = {});

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Raised when a graph would exceed the vertex budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(long long order, int budget);

  long long order() const { return order_; }

 private:
  long long order_;
};

// Signature of a combinator, or nullptr if `name` is not one.
const Signature* CombinatorSignature(std::string_view name);

// Parses one expression; throws ParseError on unknown identifiers, arity
// or argument-type mismatches, malformed integers and syntax errors.
ExprPtr ParseExpr(std::string_view text);

// Canonical text: no spaces except one after each comma. Parsing the output
// yields an equal tree.
std::string ToString(const Expr& expr);

// Variables in order of first appearance.
std::vector<std::string> FreeVariables(const Expr& expr);

using Bindings = std::map<std::string, int, std::less<>>;

// Order of the graph the expression denotes, without building it. Once the
// order is known to exceed `cap` some value above `cap` is returned.
long long ExprOrder(const Expr& expr, const Bindings& bindings = {},
                    long long cap = 1LL << 20);

// Builds the graph. Throws BudgetExceeded above `max_vertices`, and
// std::invalid_argument for unbound variables or invalid parameters.
Graph BuildExpr(const Expr& expr, const Bindings& bindings = {},
                int max_vertices = kDefaultMaxVertices);

// Integer value of an int or variable argument.
int ArgValue(const ExprArg& arg, const Bindings& bindings);

}  // namespace graphsens

#endif  // GRAPHSENS_EXPR_H_
