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


#ifndef TAURES_TPOLY_HPP
#define TAURES_TPOLY_HPP

#include <cstdint>
#include <map>
#include <string>

#include "taures/perf_element.hpp"

namespace taures {

/// Commutative polynomial in t over the perfection, i.e. an element of
/// R[t] = A (x) R.
class TPoly {
 public:
  using Coeffs = std::map<std::uint64_t, PerfElement>;

  explicit TPoly(FieldPtr field);
  static TPoly constant(const PerfElement& c);
  /// c * t^k.
  static TPoly monomial(const PerfElement& c, std::uint64_t k);
  /// The variable t.
  static TPoly t(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }
  /// Degree in t; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
  }
  PerfElement coeff(std::uint64_t k) const;
  /// Max perfection level over all coefficients.
  std::uint32_t level() const;

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& b);
  TPoly& operator-=(const TPoly& b);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly& a, const TPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Scalar multiple c * a.
  TPoly scaled(const PerfElement& c) const;
  /// Coefficients raised to q^k; t is fixed.
  TPoly twisted(std::int64_t k) const;

  /// Descending powers of t, e.g. "t^2 - (theta + 1)*t + theta^3".
  std::string render() const;
  /// True for zero and for a single term that needs no parentheses.
  bool is_simple() const;

 private:
  FieldPtr field_;
  Coeffs coeffs_;
};

/// An element of Omega (x) R = R[t] dt.
struct Differential {
  TPoly poly;

  friend bool operator==(const Differential& a, const Differential& b) {
    return a.poly == b.poly;
  }
  /// The tau-action: coefficients to the q-th power, t fixed.
  Differential twisted() const { return {poly.twisted(1)}; }
  /// "-1 dt", "(t - theta) dt".
  std::string render() const;
};

}  // namespace taures

#endif  // TAURES_TPOLY_HPP
