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

#include "taures/fq_poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "taures/errors.hpp"

namespace taures {

namespace {

constexpr std::uint64_t kDenseLimit = 1ULL << 16;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw DomainError("polynomial exponent overflow");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw DomainError("polynomial exponent overflow");
  }
  return a + b;
}

}  // namespace

FqPoly FqPoly::constant(Fq c) {
  FqPoly r;
  if (c.code != 0) r.terms_.push_back({0, c});
  return r;
}

FqPoly FqPoly::monomial(Fq c, std::uint64_t exp) {
  FqPoly r;
  if (c.code != 0) r.terms_.push_back({exp, c});
  return r;
}

FqPoly FqPoly::from_sorted(std::vector<Term> terms) {
  FqPoly r;
  r.terms_ = std::move(terms);
  return r;
}

FqPoly FqPoly::from_terms(const FiniteField& f, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  FqPoly r;
  for (const auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
      r.terms_.back().coef = f.add(r.terms_.back().coef, t.coef);
      if (r.terms_.back().coef.code == 0) r.terms_.pop_back();
    } else if (t.coef.code != 0) {
      r.terms_.push_back(t);
    }
  }
  return r;
}

namespace poly {

FqPoly add(const FiniteField& f, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<FqPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() ||
        (ia != a.terms().end() && ia->exp < ib->exp)) {
      out.push_back(*ia++);
    } else if (ia == a.terms().end() || ib->exp < ia->exp) {
      out.push_back(*ib++);
    } else {
      const Fq c = f.add(ia->coef, ib->coef);
      if (c.code != 0) out.push_back({ia->exp, c});
      ++ia;
      ++ib;
    }
  }
  return FqPoly::from_terms(f, std::move(out));
}

FqPoly neg(const FiniteField& f, const FqPoly& a) {
  std::vector<FqPoly::Term> out = a.terms();
  for (auto& t : out) t.coef = f.neg(t.coef);
  return FqPoly::from_terms(f, std::move(out));
}

FqPoly sub(const FiniteField& f, const FqPoly& a, const FqPoly& b) {
  return add(f, a, neg(f, b));
}

FqPoly scale(const FiniteField& f, const FqPoly& a, Fq c) {
  if (c.code == 0) return FqPoly{};
  std::vector<FqPoly::Term> out = a.terms();
  for (auto& t : out) t.coef = f.mul(t.coef, c);
  return FqPoly::from_terms(f, std::move(out));
}

FqPoly mul(const FiniteField& f, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly{};
  if (a.is_constant()) return scale(f, b, a.constant_term());
  if (b.is_constant()) return scale(f, a, b.constant_term());
  const std::uint64_t deg = checked_add(a.degree(), b.degree());
  const std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * b.size();
  std::vector<FqPoly::Term> out;
  if (deg < kDenseLimit && deg <= 8 * pairs + 64) {
    std::vector<Fq> acc(deg + 1);
    for (const auto& x : a.terms()) {
      for (const auto& y : b.terms()) {
        auto& slot = acc[x.exp + y.exp];
        slot = f.add(slot, f.mul(x.coef, y.coef));
      }
    }
    for (std::uint64_t e = 0; e <= deg; ++e) {
      if (acc[e].code != 0) out.push_back({e, acc[e]});
    }
    return FqPoly::from_terms(f, std::move(out));
  }
  out.reserve(pairs);
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      out.push_back({x.exp + y.exp, f.mul(x.coef, y.coef)});
    }
  }
  return FqPoly::from_terms(f, std::move(out));
}

std::pair<FqPoly, FqPoly> divmod(const FiniteField& f, const FqPoly& a,
                                 const FqPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {FqPoly{}, a};
  const Fq lead_inv = f.inv(b.lead());
  if (b.is_constant()) return {scale(f, a, lead_inv), FqPoly{}};
  const std::uint64_t db = b.degree();
  std::vector<FqPoly::Term> quot;
  std::vector<FqPoly::Term> rem;
  if (a.degree() < kDenseLimit) {
    std::vector<Fq> r(a.degree() + 1);
    for (const auto& t : a.terms()) r[t.exp] = t.coef;
    for (std::uint64_t i = a.degree() + 1; i-- > db;) {
      if (r[i].code == 0) continue;
      const Fq c = f.mul(r[i], lead_inv);
      quot.push_back({i - db, c});
      for (const auto& t : b.terms()) {
        auto& slot = r[i - db + t.exp];
        slot = f.sub(slot, f.mul(c, t.coef));
      }
    }
    for (std::uint64_t e = 0; e < db; ++e) {
      if (r[e].code != 0) rem.push_back({e, r[e]});
    }
  } else {
    std::map<std::uint64_t, Fq, std::greater<>> r;
    for (const auto& t : a.terms()) r[t.exp] = t.coef;
    while (!r.empty() && r.begin()->first >= db) {
      const auto [e, lc] = *r.begin();
      r.erase(r.begin());
      const Fq c = f.mul(lc, lead_inv);
      quot.push_back({e - db, c});
      for (const auto& t : b.terms()) {
        if (t.exp == db) continue;
        const std::uint64_t target = e - db + t.exp;
        auto it = r.find(target);
        const Fq delta = f.neg(f.mul(c, t.coef));
        if (it == r.end()) {
          r.emplace(target, delta);
        } else {
          it->second = f.add(it->second, delta);
          if (it->second.code == 0) r.erase(it);
        }
      }
    }
    for (const auto& [e, c] : r) rem.push_back({e, c});
  }
  return {FqPoly::from_terms(f, std::move(quot)),
          FqPoly::from_terms(f, std::move(rem))};
}

FqPoly exact_div(const FiniteField& f, const FqPoly& a, const FqPoly& b) {
  if (b.is_one()) return a;
  auto [q, r] = divmod(f, a, b);
  if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
  return q;
}

FqPoly make_monic(const FiniteField& f, const FqPoly& a) {
  if (a.is_zero() || a.lead().code == 1) return a;
  return scale(f, a, f.inv(a.lead()));
}

FqPoly shift_down(const FqPoly& a, std::uint64_t v) {
  if (v == 0) return a;
  std::vector<FqPoly::Term> out = a.terms();
  for (auto& t : out) t.exp -= v;
  return FqPoly::from_sorted(std::move(out));
}

FqPoly inflate(const FqPoly& a, std::uint64_t k) {
  if (k == 1 || a.is_zero()) return a;
  std::vector<FqPoly::Term> out = a.terms();
  for (auto& t : out) t.exp = checked_mul(t.exp, k);
  return FqPoly::from_sorted(std::move(out));
}

bool divisible_exponents(const FqPoly& a, std::uint64_t k) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [k](const FqPoly::Term& t) { return t.exp % k == 0; });
}

FqPoly deflate(const FqPoly& a, std::uint64_t k) {
  if (k == 1 || a.is_zero()) return a;
  std::vector<FqPoly::Term> out = a.terms();
  for (auto& t : out) t.exp /= k;
  return FqPoly::from_sorted(std::move(out));
}

FqPoly gcd(const FiniteField& f, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero()) return make_monic(f, b);
  if (b.is_zero()) return make_monic(f, a);
  const std::uint64_t va = a.terms().front().exp;
  const std::uint64_t vb = b.terms().front().exp;
  const std::uint64_t v = std::min(va, vb);
  FqPoly x = shift_down(a, va);
  FqPoly y = shift_down(b, vb);
  FqPoly g;
  if (x.is_constant() || y.is_constant()) {
    g = FqPoly::constant(f.one());
  } else {
    std::uint64_t step = 0;
    for (const auto& t : x.terms()) step = std::gcd(step, t.exp);
    for (const auto& t : y.terms()) step = std::gcd(step, t.exp);
    x = deflate(x, step);
    y = deflate(y, step);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
      FqPoly r = divmod(f, x, y).second;
      x = std::move(y);
      y = std::move(r);
    }
    g = inflate(make_monic(f, x), step);
  }
  if (v == 0) return g;
  std::vector<FqPoly::Term> out = g.terms();
  for (auto& t : out) t.exp += v;
  return FqPoly::from_sorted(std::move(out));
}

}  // namespace poly

}  // namespace taures
