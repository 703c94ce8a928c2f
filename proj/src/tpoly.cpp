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


#include "taures/tpoly.hpp"

#include <algorithm>

namespace taures {

TPoly::TPoly(FieldPtr field) : field_(std::move(field)) {}

TPoly TPoly::constant(const PerfElement& c) { return monomial(c, 0); }

TPoly TPoly::monomial(const PerfElement& c, std::uint64_t k) {
  TPoly r(c.field());
  if (!c.is_zero()) r.coeffs_.emplace(k, c);
  return r;
}

TPoly TPoly::t(FieldPtr field) {
  const PerfElement one = PerfElement::one(field);
  return monomial(one, 1);
}

PerfElement TPoly::coeff(std::uint64_t k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? PerfElement::zero(field_) : it->second;
}

std::uint32_t TPoly::level() const {
  std::uint32_t e = 0;
  for (const auto& [k, c] : coeffs_) e = std::max(e, c.level());
  return e;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& [k, c] : r.coeffs_) c = -c;
  return r;
}

TPoly& TPoly::operator+=(const TPoly& b) {
  for (const auto& [k, c] : b.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& b) { return *this += -b; }

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r(a.field_);
  for (const auto& [i, x] : a.coeffs_) {
    for (const auto& [j, y] : b.coeffs_) {
      r += TPoly::monomial(x * y, i + j);
    }
  }
  return r;
}

TPoly TPoly::scaled(const PerfElement& c) const {
  TPoly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : coeffs_) r.coeffs_.emplace(k, x * c);
  return r;
}

TPoly TPoly::twisted(std::int64_t k) const {
  TPoly r = *this;
  for (auto& [e, c] : r.coeffs_) c = c.frobenius(k);
  return r;
}

std::string TPoly::render() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [k, c] = *it;
    bool negative = false;
    std::string text;
    std::string mono;
    if (k == 1) mono = "t";
    if (k > 1) mono = "t^" + std::to_string(k);
    const auto factor = c.render_factor();
    if (k == 0) {
      text = c.render();
      if (text[0] == '-' && !out.empty()) {
        negative = true;
        text = text.substr(1);
      }
    } else if (factor) {
      negative = factor->negated;
      text = factor->text == "1" ? mono : factor->text + "*" + mono;
    } else {
      text = "(" + c.render() + ")*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + text;
    } else {
      out += (negative ? " - " : " + ") + text;
    }
  }
  return out;
}

bool TPoly::is_simple() const {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() > 1) return false;
  const auto& [k, c] = *coeffs_.begin();
  return k > 0 || c.render_factor().has_value();
}

std::string Differential::render() const {
  if (!poly.is_simple()) return "(" + poly.render() + ") dt";
  return poly.render() + " dt";
}

}  // namespace taures
