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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "graphsens/constructions.h"

namespace graphsens {
namespace {

struct Combinator {
  std::string_view name;
  ExprKind kind;
  Signature signature;
};

const std::vector<Combinator>& Combinators() {
  static const std::vector<Combinator> table = {
      {"join", ExprKind::kJoin, {"gg", ""}},
      {"cone", ExprKind::kCone, {"ig", ""}},
      {"union", ExprKind::kUnion, {"", "g"}},
      {"copies", ExprKind::kCopies, {"ig", ""}},
      {"genjoin", ExprKind::kGenJoin, {"g", "g"}},
      {"lex", ExprKind::kLex, {"gg", ""}},
      {"corona", ExprKind::kCorona, {"gg", ""}},
      {"rooted", ExprKind::kRooted, {"g", "gi"}},
      {"identify", ExprKind::kIdentify, {"gigi", ""}},
      {"repjoin", ExprKind::kRepJoin, {"gi", ""}},
  };
  return table;
}

const Combinator* FindCombinator(std::string_view name) {
  for (const Combinator& c : Combinators()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string FormatParseError(std::size_t offset, const std::string& message,
                             const std::vector<std::string>& expected) {
  std::string out = "offset " + std::to_string(offset) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr Parse() {
    SkipSpace();
    ExprPtr e = ParseCall();
    SkipSpace();
    if (pos_ < text_.size()) Fail("unexpected " + Describe(), {"end of input"});
    return e;
  }

 private:
  [[noreturn]] void Fail(const std::string& message,
                         std::vector<std::string> expected = {}) {
    throw ParseError(pos_, message, std::move(expected));
  }

  std::string Describe() const {
    if (pos_ >= text_.size()) return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view Ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  ExprPtr ParseCall() {
    if (pos_ >= text_.size() || !IsIdentStart(text_[pos_])) {
      Fail("unexpected " + Describe(), {"identifier"});
    }
    auto node = std::make_shared<Expr>();
    node->offset = pos_;
    node->name = std::string(Ident());
    const Signature* signature = nullptr;
    if (const Combinator* c = FindCombinator(node->name)) {
      node->kind = c->kind;
      signature = &c->signature;
    } else if (const FamilyInfo* f = FindFamily(node->name)) {
      node->kind = ExprKind::kFamily;
      signature = &f->signature;
    } else {
      throw ParseError(node->offset,
                       "unknown identifier '" + node->name + "'",
                       {"family or combinator name"});
    }
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != '(') {
      Fail("unexpected " + Describe() + " after '" + node->name + "'",
           {"'('"});
    }
    ++pos_;
    for (;;) {
      node->args.push_back(ParseArg());
      SkipSpace();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        break;
      }
      Fail(pos_ >= text_.size() ? "unbalanced parenthesis at end of input"
                                : "unexpected " + Describe(),
           {"','", "')'"});
    }

    std::string kinds;
    for (const ExprArg& a : node->args) {
      kinds += a.kind == ExprArg::Kind::kGraph ? 'g' : 'i';
    }
    if (!signature->Accepts(kinds)) {
      Signature got{kinds, ""};
      throw ParseError(node->offset, node->name + " expects " +
                                         signature->ToString() + ", got " +
                                         got.ToString());
    }
    return node;
  }

  ExprArg ParseArg() {
    SkipSpace();
    ExprArg arg;
    arg.offset = pos_;
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '-')) {
      arg.kind = ExprArg::Kind::kInt;
      arg.value = ParseInt();
      return arg;
    }
    if (pos_ < text_.size() && IsIdentStart(text_[pos_])) {
      const std::size_t start = pos_;
      std::string_view name = Ident();
      SkipSpace();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        pos_ = start;
        arg.kind = ExprArg::Kind::kGraph;
        arg.graph = ParseCall();
      } else {
        arg.kind = ExprArg::Kind::kVar;
        arg.var = std::string(name);
      }
      return arg;
    }
    Fail("unexpected " + Describe(), {"integer", "identifier"});
  }

  int ParseInt() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits || (pos_ < text_.size() && IsIdentChar(text_[pos_]))) {
      while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
      throw ParseError(start, "malformed integer '" +
                                  std::string(text_.substr(start, pos_ - start)) +
                                  "'");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_,
                                     value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      throw ParseError(start, "malformed integer '" +
                                  std::string(text_.substr(start, pos_ - start)) +
                                  "' (out of range)");
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void CollectVariables(const Expr& e, std::vector<std::string>& out) {
  for (const ExprArg& a : e.args) {
    if (a.kind == ExprArg::Kind::kVar &&
        std::find(out.begin(), out.end(), a.var) == out.end()) {
      out.push_back(a.var);
    } else if (a.kind == ExprArg::Kind::kGraph) {
      CollectVariables(*a.graph, out);
    }
  }
}

long long Capped(long long v, long long cap) { return std::min(v, cap + 1); }

void RequireAtLeast(int value, int lo, const Expr& e, const char* what) {
  if (value < lo) {
    throw std::invalid_argument(e.name + ": " + what + " must be at least " +
                                std::to_string(lo) + ", got " +
                                std::to_string(value));
  }
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::string message,
                       std::vector<std::string> expected)
    : std::invalid_argument(FormatParseError(offset, message, expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

BudgetExceeded::BudgetExceeded(long long order, int budget)
    : std::runtime_error("graph would have " +
                         (order > (1LL << 20) ? std::string("more than 2^20")
                                              : std::to_string(order)) +
                         " vertices, above the budget of " +
                         std::to_string(budget)),
      order_(order) {}

const Signature* CombinatorSignature(std::string_view name) {
  const Combinator* c = FindCombinator(name);
  return c == nullptr ? nullptr : &c->signature;
}

ExprPtr ParseExpr(std::string_view text) { return Parser(text).Parse(); }

std::string ToString(const Expr& expr) {
  std::string out = expr.name + "(";
  for (std::size_t i = 0; i < expr.args.size(); ++i) {
    if (i > 0) out += ", ";
    const ExprArg& a = expr.args[i];
    switch (a.kind) {
      case ExprArg::Kind::kInt:
        out += std::to_string(a.value);
        break;
      case ExprArg::Kind::kVar:
        out += a.var;
        break;
      case ExprArg::Kind::kGraph:
        out += ToString(*a.graph);
        break;
    }
  }
  return out + ")";
}

std::vector<std::string> FreeVariables(const Expr& expr) {
  std::vector<std::string> out;
  CollectVariables(expr, out);
  return out;
}

int ArgValue(const ExprArg& arg, const Bindings& bindings) {
  if (arg.kind == ExprArg::Kind::kInt) return arg.value;
  if (arg.kind == ExprArg::Kind::kVar) {
    auto it = bindings.find(arg.var);
    if (it == bindings.end()) {
      throw std::invalid_argument("unbound variable '" + arg.var + "'");
    }
    return it->second;
  }
  throw std::invalid_argument("expected an integer argument");
}

long long ExprOrder(const Expr& e, const Bindings& bindings, long long cap) {
  std::vector<long long> sub;
  std::vector<int> ints;
  for (const ExprArg& a : e.args) {
    if (a.kind == ExprArg::Kind::kGraph) {
      sub.push_back(ExprOrder(*a.graph, bindings, cap));
      if (sub.back() > cap) return cap + 1;
    } else {
      ints.push_back(ArgValue(a, bindings));
    }
  }
  switch (e.kind) {
    case ExprKind::kFamily: {
      FamilyArgs args;
      args.ints = ints;
      // Stand-ins with the right orders; FamilyOrder only looks at those.
      for (long long n : sub) args.graphs.push_back(EmptyGraph(static_cast<int>(n)));
      return Capped(FamilyOrder(e.name, args), cap);
    }
    case ExprKind::kJoin:
    case ExprKind::kUnion:
      return Capped(std::accumulate(sub.begin(), sub.end(), 0LL), cap);
    case ExprKind::kGenJoin: {
      if (sub[0] != static_cast<long long>(sub.size()) - 1) {
        throw std::invalid_argument(
            "genjoin: " + std::to_string(sub.size() - 1) +
            " parts for a base graph on " + std::to_string(sub[0]) +
            " vertices");
      }
      return Capped(std::accumulate(sub.begin() + 1, sub.end(), 0LL), cap);
    }
    case ExprKind::kCone:
      RequireAtLeast(ints[0], 1, e, "n");
      return Capped(ints[0] + sub[0], cap);
    case ExprKind::kCopies:
      RequireAtLeast(ints[0], 1, e, "number of copies");
      return Capped(static_cast<long long>(ints[0]) * sub[0], cap);
    case ExprKind::kRepJoin:
      RequireAtLeast(ints[0], 2, e, "t");
      return Capped(static_cast<long long>(ints[0]) * sub[0], cap);
    case ExprKind::kLex:
      return Capped(sub[0] * sub[1], cap);
    case ExprKind::kCorona:
      return Capped(sub[0] * (1 + sub[1]), cap);
    case ExprKind::kRooted: {
      if (sub[0] != static_cast<long long>(sub.size()) - 1) {
        throw std::invalid_argument(
            "rooted: " + std::to_string(sub.size() - 1) +
            " attachments for a base graph on " + std::to_string(sub[0]) +
            " vertices");
      }
      long long order = sub[0];
      for (std::size_t i = 1; i < sub.size(); ++i) order += sub[i] - 1;
      return Capped(order, cap);
    }
    case ExprKind::kIdentify:
      return Capped(sub[0] + sub[1] - 1, cap);
  }
  throw std::logic_error("unhandled expression kind");
}

Graph BuildExpr(const Expr& e, const Bindings& bindings, int max_vertices) {
  const long long order = ExprOrder(e, bindings);
  if (order > max_vertices) throw BudgetExceeded(order, max_vertices);

  std::vector<Graph> sub;
  std::vector<int> ints;
  for (const ExprArg& a : e.args) {
    if (a.kind == ExprArg::Kind::kGraph) {
      sub.push_back(BuildExpr(*a.graph, bindings, max_vertices));
    } else {
      ints.push_back(ArgValue(a, bindings));
    }
  }
  switch (e.kind) {
    case ExprKind::kFamily:
      return BuildFamily(e.name, FamilyArgs{ints, sub});
    case ExprKind::kJoin:
      return Join(sub[0], sub[1]);
    case ExprKind::kCone:
      return Cone(ints[0], sub[0]);
    case ExprKind::kUnion:
      return DisjointUnion(sub);
    case ExprKind::kCopies:
      return DisjointUnion(std::vector<Graph>(ints[0], sub[0]));
    case ExprKind::kGenJoin:
      return GeneralizedJoin(sub[0], std::span(sub).subspan(1));
    case ExprKind::kLex:
      return Lexicographic(sub[0], sub[1]);
    case ExprKind::kCorona:
      return Corona(sub[0], sub[1]);
    case ExprKind::kRooted: {
      std::vector<RootedGraph> attachments;
      for (std::size_t i = 1; i < sub.size(); ++i) {
        attachments.push_back(MakeRooted(sub[i], ints[i - 1]));
      }
      return RootedProduct(sub[0], attachments);
    }
    case ExprKind::kIdentify:
      return IdentifyVertices(sub[0], ints[0], sub[1], ints[1]);
    case ExprKind::kRepJoin:
      return RepeatedJoin(sub[0], ints[0]);
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace graphsens
