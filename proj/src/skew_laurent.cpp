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


#include "taures/skew_laurent.hpp"

#include <algorithm>

#include "taures/errors.hpp"

namespace taures {

SkewLaurent::SkewLaurent(FieldPtr field) : field_(std::move(field)) {}

SkewLaurent SkewLaurent::one(FieldPtr field) {
  return scalar(PerfElement::one(std::move(field)));
}

SkewLaurent SkewLaurent::scalar(const PerfElement& a) { return monomial(0, a); }

SkewLaurent SkewLaurent::monomial(std::int64_t k, const PerfElement& a) {
  SkewLaurent r(a.field());
  if (!a.is_zero()) r.coeffs_.emplace(k, a);
  return r;
}

SkewLaurent SkewLaurent::tau_power(FieldPtr field, std::int64_t k) {
  const PerfElement one = PerfElement::one(field);
  return monomial(k, one);
}

SkewLaurent SkewLaurent::unknown_below(FieldPtr field, std::int64_t floor) {
  SkewLaurent r(std::move(field));
  r.floor_ = floor;
  return r;
}

SkewLaurent SkewLaurent::from_left_coeffs(
    FieldPtr field,
    const std::vector<std::pair<PerfElement, std::int64_t>>& terms) {
  SkewLaurent r(field);
  for (const auto& [a, i] : terms) {
    // a tau^i = tau^i a^{q^{-i}}
    r += monomial(i, a.frobenius(-i));
  }
  return r;
}

void SkewLaurent::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero() || (floor_ && it->first < *floor_)) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

std::optional<std::int64_t> SkewLaurent::deg_tau() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

std::optional<std::int64_t> SkewLaurent::ord() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

PerfElement SkewLaurent::coeff(std::int64_t i) const {
  if (floor_ && i < *floor_) {
    throw PrecisionError("coefficient of tau^" + std::to_string(i) +
                         " lies below the precision floor " +
                         std::to_string(*floor_));
  }
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? PerfElement::zero(field_) : it->second;
}

SkewLaurent SkewLaurent::truncated(std::int64_t floor) const {
  SkewLaurent r = *this;
  r.floor_ = r.floor_ ? std::max(*r.floor_, floor) : floor;
  r.coeffs_.erase(r.coeffs_.begin(), r.coeffs_.lower_bound(*r.floor_));
  return r;
}

SkewLaurent SkewLaurent::operator-() const {
  SkewLaurent r = *this;
  for (auto& [k, c] : r.coeffs_) c = -c;
  return r;
}

SkewLaurent& SkewLaurent::operator+=(const SkewLaurent& b) {
  if (b.floor_) floor_ = floor_ ? std::max(*floor_, *b.floor_) : *b.floor_;
  for (const auto& [k, c] : b.coeffs_) {
    if (floor_ && k < *floor_) continue;
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  if (floor_) coeffs_.erase(coeffs_.begin(), coeffs_.lower_bound(*floor_));
  return *this;
}

SkewLaurent& SkewLaurent::operator-=(const SkewLaurent& b) { return *this += -b; }

SkewLaurent mul(const SkewLaurent& f, const SkewLaurent& g,
                std::optional<std::int64_t> limit) {
  // Highest unknown degree of each factor, and highest known degree.
  std::optional<std::int64_t> uf, ug;
  if (f.floor()) uf = *f.floor() - 1;
  if (g.floor()) ug = *g.floor() - 1;
  const auto df = f.deg_tau();
  const auto dg = g.deg_tau();
  std::optional<std::int64_t> top_unknown;
  auto bump = [&](std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
    if (a && b) top_unknown = std::max(top_unknown.value_or(*a + *b), *a + *b);
  };
  bump(uf, dg);
  bump(df, ug);
  bump(uf, ug);
  std::optional<std::int64_t> floor;
  if (top_unknown) floor = *top_unknown + 1;
  if (limit) {
    // An exact product with nothing below the limit stays exact.
    const auto of = f.ord();
    const auto og = g.ord();
    const bool drops = floor || (of && og && *of + *og < *limit);
    if (drops) floor = floor ? std::max(*floor, *limit) : *limit;
  }

  SkewLaurent r = floor ? SkewLaurent::unknown_below(f.field(), *floor)
                        : SkewLaurent::zero(f.field());
  SkewLaurent::Coeffs acc;
  for (const auto& [i, a] : f.coeffs()) {
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) {
      const std::int64_t j = it->first;
      const std::int64_t k = i + j;
      if (floor && k < *floor) break;
      PerfElement term = a.frobenius(-j) * it->second;
      auto [slot, inserted] = acc.emplace(k, term);
      if (!inserted) slot->second += term;
    }
  }
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) r += SkewLaurent::monomial(k, c);
  }
  return r;
}

SkewLaurent operator*(const SkewLaurent& f, const SkewLaurent& g) {
  return mul(f, g);
}

bool operator==(const SkewLaurent& a, const SkewLaurent& b) {
  return a.floor_ == b.floor_ && a.coeffs_ == b.coeffs_;
}

bool equal_to_precision(const SkewLaurent& a, const SkewLaurent& b) {
  std::optional<std::int64_t> floor = a.floor();
  if (b.floor()) floor = floor ? std::max(*floor, *b.floor()) : *b.floor();
  auto known = [&](const SkewLaurent& x) {
    SkewLaurent::Coeffs c = x.coeffs();
    if (floor) c.erase(c.begin(), c.lower_bound(*floor));
    return c;
  };
  return known(a) == known(b);
}

SkewLaurent invert_scalar(const SkewLaurent& f, std::int64_t P) {
  if (P < 1) throw DomainError("inversion precision must be at least 1");
  const auto v_opt = f.deg_tau();
  if (!v_opt) {
    if (f.is_exact()) throw ArithmeticError("inverse of zero in R((sigma))");
    throw PrecisionError("series is unknown at every known degree");
  }
  const std::int64_t v = *v_opt;
  const std::int64_t need = v - P + 1;
  if (f.floor() && *f.floor() > need) {
    throw PrecisionError("input known only from tau^" + std::to_string(*f.floor()) +
                         ", need tau^" + std::to_string(need));
  }
  const FieldPtr& F = f.field();
  const PerfElement a_inv = f.coeff(v).inverse();

  // f = tau^v a (1 + h), h = a^{-1} sigma^v (f - tau^v a); h_k for k = 1..P-1
  // is the coefficient of sigma^k.
  std::vector<PerfElement> h(static_cast<std::size_t>(P), PerfElement::zero(F));
  bool h_zero = true;
  for (const auto& [i, c] : f.coeffs()) {
    if (i == v || i < need) continue;
    const std::int64_t k = v - i;
    // a^{-1} tau^{i-v} c = tau^{-k} (a^{-1})^{q^k} c
    h[static_cast<std::size_t>(k)] = a_inv.frobenius(k) * c;
    h_zero = false;
  }
  // s = (1 + h)^{-1} solves s = 1 - s h coefficientwise:
  // s_k = -sum_{i<k} s_i^{q^{k-i}} h_{k-i}.
  std::vector<PerfElement> s(static_cast<std::size_t>(P), PerfElement::zero(F));
  s[0] = PerfElement::one(F);
  for (std::int64_t k = 1; k < P && !h_zero; ++k) {
    PerfElement acc = PerfElement::zero(F);
    for (std::int64_t i = 0; i < k; ++i) {
      const auto& hk = h[static_cast<std::size_t>(k - i)];
      const auto& si = s[static_cast<std::size_t>(i)];
      if (hk.is_zero() || si.is_zero()) continue;
      acc += si.frobenius(k - i) * hk;
    }
    s[static_cast<std::size_t>(k)] = -acc;
  }
  // f^{-1} = s a^{-1} sigma^v = sum_k tau^{-k} s_k tau^{-v} (a^{-1})^{q^v}
  //        = sum_k tau^{-k-v} s_k^{q^v} (a^{-1})^{q^v}.
  const PerfElement tail = a_inv.frobenius(v);
  const bool monomial = f.is_exact() && f.coeffs().size() == 1;
  SkewLaurent r = monomial
                      ? SkewLaurent::zero(F)
                      : SkewLaurent::unknown_below(F, -v - P + 1);
  for (std::int64_t k = 0; k < P; ++k) {
    const auto& sk = s[static_cast<std::size_t>(k)];
    if (sk.is_zero()) continue;
    r += SkewLaurent::monomial(-k - v, sk.frobenius(v) * tail);
  }
  return r;
}

std::string render_big_o(std::int64_t floor) {
  const std::int64_t n = 1 - floor;
  if (n >= 2) return "O(sigma^" + std::to_string(n) + ")";
  if (n == 1) return "O(sigma)";
  if (n == 0) return "O(1)";
  if (n == -1) return "O(tau)";
  return "O(tau^" + std::to_string(-n) + ")";
}

namespace {

std::string tau_monomial(std::int64_t k) {
  if (k == 0) return "";
  if (k == 1) return "tau";
  if (k == -1) return "sigma";
  if (k > 0) return "tau^" + std::to_string(k);
  return "sigma^" + std::to_string(-k);
}

}  // namespace

std::string SkewLaurent::render() const {
  if (coeffs_.empty()) return floor_ ? render_big_o(*floor_) : "0";
  const bool single = coeffs_.size() == 1 && !floor_;
  std::string out;
  for (const auto& [k, c] : coeffs_) {
    bool negative = false;
    std::string text;
    const std::string mono = tau_monomial(k);
    const auto factor = c.render_factor();
    if (factor) {
      negative = factor->negated;
      if (mono.empty()) {
        text = factor->text;
      } else {
        text = factor->text == "1" ? mono : mono + " * " + factor->text;
      }
    } else if (mono.empty()) {
      text = single ? c.render() : "(" + c.render() + ")";
    } else {
      text = mono + " * (" + c.render() + ")";
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + text;
    } else {
      out += (negative ? " - " : " + ") + text;
    }
  }
  if (floor_) out += " + " + render_big_o(*floor_);
  return out;
}

}  // namespace taures
