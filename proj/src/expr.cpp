// Copyright 2026 The taures Authors.
//
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


#include "taures/expr.hpp"

#include <cctype>
#include <limits>
#include <memory>
#include <vector>

#include "taures/errors.hpp"

namespace taures {

namespace {

constexpr std::uint64_t kMaxExponent = 1U << 20;

struct Token {
  enum class Kind { kInt, kIdent, kOp, kEnd };
  Kind kind;
  std::string text;
  int column;
};

struct Node {
  enum class Kind { kInt, kSym, kAdd, kSub, kNeg, kMul, kDiv, kPow, kRoot, kBigO };
  Kind kind;
  std::string text;
  std::uint64_t n = 0;
  std::uint64_t d = 1;
  std::unique_ptr<Node> a;
  std::unique_ptr<Node> b;
  int column = 0;  // operator or atom
  int start = 0;   // first character of the subexpression
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  Parser(std::string_view text, const ExprScope& scope) : scope_(scope) {
    lex(text);
  }

  NodePtr parse() {
    if (peek().kind == Token::Kind::kEnd) fail("empty expression", peek().column);
    NodePtr e = expr();
    if (peek().kind != Token::Kind::kEnd) {
      fail("unexpected '" + peek().text + "'", peek().column);
    }
    return e;
  }

  [[noreturn]] void fail(const std::string& msg, int column) const {
    throw ParseError(msg, scope_.line, column);
  }

 private:
  void lex(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      const int col = scope_.column + static_cast<int>(i);
      if (c == ' ' || c == '\t') {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        tokens_.push_back({Token::Kind::kInt, std::string(text.substr(i, j - i)), col});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                   text[j] == '_')) {
          ++j;
        }
        tokens_.push_back({Token::Kind::kIdent, std::string(text.substr(i, j - i)), col});
        i = j;
      } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
        tokens_.push_back({Token::Kind::kOp, std::string(1, c), col});
        ++i;
      } else {
        const auto uc = static_cast<unsigned char>(c);
        fail(uc < 0x80 ? "unexpected character '" + std::string(1, c) + "'"
                       : std::string("unexpected non-ASCII character"),
             col);
      }
    }
    tokens_.push_back({Token::Kind::kEnd, "end of input",
                       scope_.column + static_cast<int>(text.size())});
  }

  const Token& peek() const { return tokens_[pos_]; }
  bool at_op(char c) const {
    return peek().kind == Token::Kind::kOp && peek().text[0] == c;
  }
  void expect(char c) {
    if (!at_op(c)) {
      fail("expected '" + std::string(1, c) + "' but found '" + peek().text + "'",
           peek().column);
    }
    ++pos_;
  }

  static NodePtr binary(Node::Kind k, NodePtr a, NodePtr b, int column) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    n->column = column;
    n->start = n->kind == Node::Kind::kNeg ? column : n->a->start;
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (at_op('+') || at_op('-')) {
      const Node::Kind k = at_op('+') ? Node::Kind::kAdd : Node::Kind::kSub;
      const int col = peek().column;
      ++pos_;
      lhs = binary(k, std::move(lhs), term(), col);
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (at_op('*') || at_op('/')) {
      const Node::Kind k = at_op('*') ? Node::Kind::kMul : Node::Kind::kDiv;
      const int col = peek().column;
      ++pos_;
      lhs = binary(k, std::move(lhs), unary(), col);
    }
    return lhs;
  }

  NodePtr unary() {
    if (at_op('-')) {
      const int col = peek().column;
      ++pos_;
      return binary(Node::Kind::kNeg, unary(), nullptr, col);
    }
    return power();
  }

  std::uint64_t exponent_literal() {
    if (peek().kind != Token::Kind::kInt) {
      fail("expected a non-negative integer exponent", peek().column);
    }
    const Token& t = peek();
    std::uint64_t v = 0;
    for (char c : t.text) {
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > kMaxExponent) fail("exponent " + t.text + " is too large", t.column);
    }
    ++pos_;
    return v;
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!at_op('^')) return base;
    const int col = peek().column;
    ++pos_;
    NodePtr n = binary(Node::Kind::kPow, std::move(base), nullptr, col);
    if (at_op('(')) {
      ++pos_;
      n->n = exponent_literal();
      if (at_op('/')) {
        ++pos_;
        n->kind = Node::Kind::kRoot;
        const int dcol = peek().column;
        n->d = exponent_literal();
        if (n->d == 0) fail("exponent denominator is zero", dcol);
      }
      expect(')');
    } else {
      n->n = exponent_literal();
    }
    if (at_op('^')) fail("chained '^' needs parentheses", peek().column);
    return n;
  }

  NodePtr atom() {
    const Token& t = peek();
    auto n = std::make_unique<Node>();
    n->column = t.column;
    n->start = t.column;
    switch (t.kind) {
      case Token::Kind::kInt:
        n->kind = Node::Kind::kInt;
        n->text = t.text;
        ++pos_;
        return n;
      case Token::Kind::kIdent:
        ++pos_;
        if (t.text == "O" && at_op('(')) {
          ++pos_;
          n->kind = Node::Kind::kBigO;
          n->a = expr();
          expect(')');
          return n;
        }
        n->kind = Node::Kind::kSym;
        n->text = t.text;
        return n;
      case Token::Kind::kOp:
        if (t.text == "(") {
          const int open = t.column;
          ++pos_;
          NodePtr e = expr();
          expect(')');
          e->start = open;
          return e;
        }
        fail("unexpected '" + t.text + "'", t.column);
      case Token::Kind::kEnd:
        break;
    }
    fail("unexpected end of input", t.column);
  }

  const ExprScope& scope_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Fq reduce_literal(const FiniteField& f, const std::string& digits) {
  std::uint64_t r = 0;
  for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % f.p();
  return f.from_int(static_cast<std::int64_t>(r));
}

// a^(n/d) for d = p^s: (a^(n p^(mL - s)))^(1/q^L) with L = ceil(s/m).
PerfElement perf_root(const PerfElement& a, std::uint64_t n, std::uint64_t d) {
  const FiniteField& f = a.ff();
  std::uint64_t s = 0;
  for (std::uint64_t x = d; x > 1; x /= f.p()) {
    if (x % f.p() != 0) {
      throw DomainError("exponent denominator " + std::to_string(d) +
                        " is not a power of " + std::to_string(f.p()));
    }
    ++s;
  }
  const std::uint64_t level = (s + f.m() - 1) / f.m();
  std::uint64_t e = n;
  for (std::uint64_t i = s; i < level * f.m(); ++i) {
    if (e > std::numeric_limits<std::uint64_t>::max() / f.p()) {
      throw DomainError("exponent overflow");
    }
    e *= f.p();
  }
  return a.pow(e).frobenius(-static_cast<std::int64_t>(level));
}

template <class V>
V power_of(const V& base, std::uint64_t n, V one) {
  V result = std::move(one);
  V b = base;
  while (n > 0) {
    if (n & 1U) result = result * b;
    n >>= 1U;
    if (n > 0) b = b * b;
  }
  return result;
}

class SkewPolicy {
 public:
  using Value = SkewLaurent;
  explicit SkewPolicy(const ExprScope& s) : s_(s) {}

  Value integer(const Node& n) const {
    return SkewLaurent::scalar(PerfElement::from_fq(s_.field, reduce_literal(*s_.field, n.text)));
  }
  Value symbol(const Node& n) const {
    if (n.text == "tau") return SkewLaurent::tau_power(s_.field, 1);
    if (n.text == "sigma") return SkewLaurent::tau_power(s_.field, -1);
    if (n.text == "theta") {
      return SkewLaurent::scalar(s_.theta ? *s_.theta : PerfElement::theta(s_.field));
    }
    if (n.text == "z" && s_.allow_z) {
      return SkewLaurent::scalar(PerfElement::from_fq(s_.field, s_.field->generator()));
    }
    return fail_symbol(n);
  }
  Value one() const { return SkewLaurent::one(s_.field); }
  Value divide(const Value& a, const Value& b, const Node& n) const {
    const auto x = scalar(a);
    const auto y = scalar(b);
    if (!x) fail("'/' needs a numerator free of tau and sigma", n.a->start);
    if (!y) fail("'/' needs a divisor free of tau and sigma", n.b->start);
    if (y->is_zero()) fail("division by zero", n.column);
    return SkewLaurent::scalar(*x / *y);
  }
  Value root(const Value& a, const Node& n) const {
    const auto x = scalar(a);
    if (!x) fail("fractional powers apply to scalars only", n.column);
    return SkewLaurent::scalar(perf_root(*x, n.n, n.d));
  }
  Value big_o(const Value& a, const Node& n) const {
    if (a.is_exact() && a.coeffs().size() == 1 && a.coeffs().begin()->second.is_one()) {
      return SkewLaurent::unknown_below(s_.field, a.coeffs().begin()->first + 1);
    }
    fail("O(...) needs a power of tau or sigma", n.a->start);
  }

 private:
  static std::optional<PerfElement> scalar(const Value& v) {
    if (!v.is_exact()) return std::nullopt;
    if (v.coeffs().empty()) return PerfElement::zero(v.field());
    if (v.coeffs().size() == 1 && v.coeffs().begin()->first == 0) {
      return v.coeffs().begin()->second;
    }
    return std::nullopt;
  }
  [[noreturn]] Value fail_symbol(const Node& n) const {
    if (n.text == "z") fail("'z' needs a declared field modulus", n.column);
    fail("unknown symbol '" + n.text + "'", n.column);
  }
  [[noreturn]] void fail(const std::string& msg, int col) const {
    throw ParseError(msg, s_.line, col);
  }
  const ExprScope& s_;
};

class TPolyPolicy {
 public:
  using Value = TPoly;
  explicit TPolyPolicy(const ExprScope& s) : s_(s) {}

  Value integer(const Node& n) const {
    return TPoly::constant(PerfElement::from_fq(s_.field, reduce_literal(*s_.field, n.text)));
  }
  Value symbol(const Node& n) const {
    if (n.text == "t") return TPoly::t(s_.field);
    if (n.text == "theta") {
      return TPoly::constant(s_.theta ? *s_.theta : PerfElement::theta(s_.field));
    }
    if (n.text == "z" && s_.allow_z) {
      return TPoly::constant(PerfElement::from_fq(s_.field, s_.field->generator()));
    }
    if (n.text == "z") fail("'z' needs a declared field modulus", n.column);
    fail("unknown symbol '" + n.text + "'", n.column);
  }
  Value one() const { return TPoly::constant(PerfElement::one(s_.field)); }
  Value divide(const Value& a, const Value& b, const Node& n) const {
    if (!b.is_constant()) fail("'/' needs a divisor free of t", n.b->start);
    const PerfElement c = b.coeff(0);
    if (c.is_zero()) fail("division by zero", n.column);
    return a.scaled(c.inverse());
  }
  Value root(const Value& a, const Node& n) const {
    if (!a.is_constant()) fail("fractional powers apply to scalars only", n.column);
    return TPoly::constant(perf_root(a.coeff(0), n.n, n.d));
  }
  Value big_o(const Value&, const Node& n) const {
    fail("O(...) is not allowed here", n.column);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int col) const {
    throw ParseError(msg, s_.line, col);
  }
  const ExprScope& s_;
};

// FqPoly lacks arithmetic operators; a thin wrapper supplies them.
struct UniValue {
  const FiniteField* f;
  FqPoly p;
  friend UniValue operator+(const UniValue& a, const UniValue& b) {
    return {a.f, poly::add(*a.f, a.p, b.p)};
  }
  friend UniValue operator-(const UniValue& a, const UniValue& b) {
    return {a.f, poly::sub(*a.f, a.p, b.p)};
  }
  friend UniValue operator*(const UniValue& a, const UniValue& b) {
    return {a.f, poly::mul(*a.f, a.p, b.p)};
  }
  UniValue operator-() const { return {f, poly::neg(*f, p)}; }
};

class UniPolicy {
 public:
  using Value = UniValue;
  UniPolicy(const ExprScope& s, const std::string& var) : s_(s), var_(var) {}

  Value integer(const Node& n) const {
    return {s_.field.get(), FqPoly::constant(reduce_literal(*s_.field, n.text))};
  }
  Value symbol(const Node& n) const {
    if (n.text == var_) return {s_.field.get(), FqPoly::monomial(s_.field->one(), 1)};
    if (n.text == "z" && s_.allow_z) {
      return {s_.field.get(), FqPoly::constant(s_.field->generator())};
    }
    if (n.text == "z") fail("'z' needs a declared field modulus", n.column);
    fail("unknown symbol '" + n.text + "'", n.column);
  }
  Value one() const { return {s_.field.get(), FqPoly::constant(s_.field->one())}; }
  Value divide(const Value& a, const Value& b, const Node& n) const {
    if (!b.p.is_constant()) fail("'/' needs a constant divisor", n.b->start);
    if (b.p.is_zero()) fail("division by zero", n.column);
    return {a.f, poly::scale(*a.f, a.p, a.f->inv(b.p.constant_term()))};
  }
  Value root(const Value&, const Node& n) const {
    fail("fractional powers are not allowed here", n.column);
  }
  Value big_o(const Value&, const Node& n) const {
    fail("O(...) is not allowed here", n.column);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int col) const {
    throw ParseError(msg, s_.line, col);
  }
  const ExprScope& s_;
  std::string var_;
};

template <class P>
typename P::Value eval(const Node& n, const P& policy, const ExprScope& scope) {
  using V = typename P::Value;
  try {
    switch (n.kind) {
      case Node::Kind::kInt:
        return policy.integer(n);
      case Node::Kind::kSym:
        return policy.symbol(n);
      case Node::Kind::kNeg:
        return -eval(*n.a, policy, scope);
      case Node::Kind::kAdd:
        return eval(*n.a, policy, scope) + eval(*n.b, policy, scope);
      case Node::Kind::kSub:
        return eval(*n.a, policy, scope) - eval(*n.b, policy, scope);
      case Node::Kind::kMul:
        return eval(*n.a, policy, scope) * eval(*n.b, policy, scope);
      case Node::Kind::kDiv:
        return policy.divide(eval(*n.a, policy, scope), eval(*n.b, policy, scope), n);
      case Node::Kind::kPow:
        return power_of<V>(eval(*n.a, policy, scope), n.n, policy.one());
      case Node::Kind::kRoot:
        return policy.root(eval(*n.a, policy, scope), n);
      case Node::Kind::kBigO:
        return policy.big_o(eval(*n.a, policy, scope), n);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(err.what(), scope.line, n.column);
  }
  throw ParseError("malformed expression", scope.line, n.column);
}

}  // namespace

SkewLaurent parse_skew_expr(std::string_view text, const ExprScope& scope) {
  const NodePtr root = Parser(text, scope).parse();
  return eval(*root, SkewPolicy(scope), scope);
}

SkewLaurent parse_skew_expr(std::string_view text, const FieldPtr& field) {
  ExprScope scope;
  scope.field = field;
  scope.allow_z = field->m() > 1;
  return parse_skew_expr(text, scope);
}

TPoly parse_tpoly_expr(std::string_view text, const ExprScope& scope) {
  const NodePtr root = Parser(text, scope).parse();
  return eval(*root, TPolyPolicy(scope), scope);
}

FqPoly parse_univariate(std::string_view text, const ExprScope& scope,
                        const std::string& var) {
  const NodePtr root = Parser(text, scope).parse();
  return eval(*root, UniPolicy(scope, var), scope).p;
}

PerfElement theta_root(const FieldPtr& field, std::uint64_t n, std::uint64_t d) {
  return perf_root(PerfElement::theta(field), n, d);
}

}  // namespace taures
