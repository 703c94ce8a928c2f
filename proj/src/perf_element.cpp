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

#include "taures/perf_element.hpp"

#include <limits>
#include <sstream>

#include "taures/errors.hpp"
#include "taures/util.hpp"

namespace taures {

std::uint64_t q_power(std::uint32_t q, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) {
      throw DomainError("exponent q^" + std::to_string(k) + " overflows");
    }
    r *= q;
  }
  return r;
}

PerfElement::PerfElement(FieldPtr field)
    : field_(std::move(field)), den_(FqPoly::constant(Fq{1})) {}

PerfElement PerfElement::one(FieldPtr field) {
  PerfElement r(std::move(field));
  r.num_ = FqPoly::constant(Fq{1});
  return r;
}

PerfElement PerfElement::from_fq(FieldPtr field, Fq c) {
  PerfElement r(std::move(field));
  r.num_ = FqPoly::constant(c);
  return r;
}

PerfElement PerfElement::from_int(FieldPtr field, std::int64_t v) {
  const Fq c = field->from_int(v);
  return from_fq(std::move(field), c);
}

PerfElement PerfElement::theta(FieldPtr field) {
  PerfElement r(std::move(field));
  r.num_ = FqPoly::monomial(Fq{1}, 1);
  return r;
}

PerfElement PerfElement::from_fraction(FieldPtr field, FqPoly num, FqPoly den,
                                       std::uint32_t level) {
  PerfElement r(std::move(field));
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.level_ = level;
  r.canonicalize();
  return r;
}

void PerfElement::canonicalize() {
  const FiniteField& f = *field_;
  if (den_.is_zero()) throw ArithmeticError("division by zero");
  if (num_.is_zero()) {
    den_ = FqPoly::constant(f.one());
    level_ = 0;
    return;
  }
  if (!den_.is_constant()) {
    const FqPoly g = poly::gcd(f, num_, den_);
    if (!g.is_one()) {
      num_ = poly::exact_div(f, num_, g);
      den_ = poly::exact_div(f, den_, g);
    }
  }
  if (den_.lead() != f.one()) {
    const Fq s = f.inv(den_.lead());
    num_ = poly::scale(f, num_, s);
    den_ = poly::scale(f, den_, s);
  }
  const std::uint32_t q = f.q();
  while (level_ > 0 && poly::divisible_exponents(num_, q) &&
         poly::divisible_exponents(den_, q)) {
    num_ = poly::deflate(num_, q);
    den_ = poly::deflate(den_, q);
    --level_;
  }
}

void PerfElement::check_same_field(const PerfElement& b) const {
  if (field_ != b.field_ && !field_->same_as(*b.field_)) {
    throw DomainError("operands live over different fields");
  }
}

std::pair<FqPoly, FqPoly> PerfElement::lifted(std::uint32_t level) const {
  if (level == level_) return {num_, den_};
  const std::uint64_t k = q_power(field_->q(), level - level_);
  return {poly::inflate(num_, k), poly::inflate(den_, k)};
}

std::optional<Fq> PerfElement::as_fq() const {
  if (num_.is_constant() && den_.is_one()) return num_.constant_term();
  return std::nullopt;
}

PerfElement PerfElement::operator-() const {
  PerfElement r = *this;
  r.num_ = poly::neg(*field_, num_);
  return r;
}

PerfElement& PerfElement::operator+=(const PerfElement& b) {
  check_same_field(b);
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  const FiniteField& f = *field_;
  const std::uint32_t level = std::max(level_, b.level_);
  auto [an, ad] = lifted(level);
  auto [bn, bd] = b.lifted(level);
  if (ad == bd) {
    num_ = poly::add(f, an, bn);
    den_ = std::move(ad);
  } else {
    num_ = poly::add(f, poly::mul(f, an, bd), poly::mul(f, bn, ad));
    den_ = poly::mul(f, ad, bd);
  }
  level_ = level;
  canonicalize();
  return *this;
}

PerfElement& PerfElement::operator-=(const PerfElement& b) {
  return *this += -b;
}

PerfElement& PerfElement::operator*=(const PerfElement& b) {
  check_same_field(b);
  if (is_zero()) return *this;
  if (b.is_zero()) return *this = b;
  const FiniteField& f = *field_;
  if (auto c = b.as_fq()) {
    num_ = poly::scale(f, num_, *c);
    return *this;
  }
  if (auto c = as_fq()) {
    const Fq s = *c;
    *this = b;
    num_ = poly::scale(f, num_, s);
    return *this;
  }
  const std::uint32_t level = std::max(level_, b.level_);
  auto [an, ad] = lifted(level);
  auto [bn, bd] = b.lifted(level);
  // Cross cancellation keeps the product reduced.
  const FqPoly g1 = poly::gcd(f, an, bd);
  const FqPoly g2 = poly::gcd(f, bn, ad);
  if (!g1.is_one()) {
    an = poly::exact_div(f, an, g1);
    bd = poly::exact_div(f, bd, g1);
  }
  if (!g2.is_one()) {
    bn = poly::exact_div(f, bn, g2);
    ad = poly::exact_div(f, ad, g2);
  }
  num_ = poly::mul(f, an, bn);
  den_ = poly::mul(f, ad, bd);
  level_ = level;
  canonicalize();
  return *this;
}

PerfElement& PerfElement::operator/=(const PerfElement& b) {
  return *this *= b.inverse();
}

PerfElement PerfElement::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  PerfElement r = *this;
  std::swap(r.num_, r.den_);
  r.canonicalize();
  return r;
}

PerfElement PerfElement::pow(std::uint64_t n) const {
  PerfElement result = one(field_);
  PerfElement base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

PerfElement PerfElement::frobenius(std::int64_t k) const {
  if (k == 0 || as_fq()) return *this;
  PerfElement r = *this;
  if (k > 0) {
    const std::uint64_t drop =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(k), r.level_);
    r.level_ -= static_cast<std::uint32_t>(drop);
    const std::uint64_t rest = static_cast<std::uint64_t>(k) - drop;
    if (rest > 0) {
      const std::uint64_t e = q_power(field_->q(), rest);
      r.num_ = poly::inflate(r.num_, e);
      r.den_ = poly::inflate(r.den_, e);
    }
    return r;
  }
  const std::uint64_t up = static_cast<std::uint64_t>(-k);
  if (up > std::numeric_limits<std::uint32_t>::max() - r.level_) {
    throw DomainError("perfection level overflow");
  }
  r.level_ += static_cast<std::uint32_t>(up);
  r.canonicalize();
  return r;
}

PerfElement field_arith(const PerfElement& a, const PerfElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::kAdd:
      return a + b;
    case FieldOp::kSub:
      return a - b;
    case FieldOp::kMul:
      return a * b;
    case FieldOp::kDiv:
      return a / b;
  }
  throw DomainError("unknown field operation");
}

PerfElement q_pow(const PerfElement& a) { return a.frobenius(1); }
PerfElement q_root(const PerfElement& a) { return a.frobenius(-1); }
std::uint32_t perfection_level(const PerfElement& a) { return a.level(); }

namespace {

// theta^(k/q^level) with the fraction reduced.
std::string render_monomial(const FiniteField& f, std::uint64_t k,
                            std::uint32_t level) {
  std::uint64_t n = k;
  std::uint64_t strip = static_cast<std::uint64_t>(f.m()) * level;
  while (strip > 0 && n % f.p() == 0) {
    n /= f.p();
    --strip;
  }
  std::string out = "theta";
  if (strip == 0) {
    if (n != 1) out += "^" + std::to_string(n);
    return out;
  }
  out += "^(" + std::to_string(n) + "/" + decimal_power(f.p(), strip) + ")";
  return out;
}

// Signed pieces of a polynomial in theta, highest degree first.
struct Piece {
  bool negative;
  std::string text;
};

Piece render_term(const FiniteField& f, const FqPoly::Term& t,
                  std::uint32_t level) {
  const Fq c = t.coef;
  if (t.exp == 0) {
    if (f.is_compound(c)) return {false, "(" + f.render(c) + ")"};
    std::string s = f.render(c);
    if (s[0] == '-') return {true, s.substr(1)};
    return {false, s};
  }
  const std::string mono = render_monomial(f, t.exp, level);
  if (f.is_compound(c)) return {false, "(" + f.render(c) + ")*" + mono};
  std::string s = f.render(c);
  bool negative = false;
  if (s[0] == '-') {
    negative = true;
    s = s.substr(1);
  }
  if (s == "1") return {negative, mono};
  return {negative, s + "*" + mono};
}

std::string render_poly(const FiniteField& f, const FqPoly& p,
                        std::uint32_t level) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (std::size_t i = terms.size(); i-- > 0;) {
    const Piece piece = render_term(f, terms[i], level);
    if (out.empty()) {
      out = (piece.negative ? "-" : "") + piece.text;
    } else {
      out += (piece.negative ? " - " : " + ") + piece.text;
    }
  }
  return out;
}

bool renders_as_sum(const FiniteField& f, const FqPoly& p) {
  return p.size() > 1 ||
         (p.size() == 1 && p.terms()[0].exp == 0 && f.is_compound(p.lead()));
}

}  // namespace

std::string PerfElement::render() const {
  const FiniteField& f = *field_;
  std::string n = render_poly(f, num_, level_);
  if (den_.is_one()) return n;
  if (renders_as_sum(f, num_)) n = "(" + n + ")";
  std::string d = render_poly(f, den_, level_);
  if (den_.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::optional<PerfElement::Factor> PerfElement::render_factor() const {
  const FiniteField& f = *field_;
  if (!den_.is_one() || num_.size() != 1) return std::nullopt;
  const auto& t = num_.terms()[0];
  if (t.exp == 0 && f.is_compound(t.coef)) return std::nullopt;
  const Piece piece = render_term(f, t, level_);
  return Factor{piece.negative, piece.text};
}

}  // namespace taures
