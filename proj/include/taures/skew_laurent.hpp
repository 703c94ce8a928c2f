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


#ifndef TAURES_SKEW_LAURENT_HPP
#define TAURES_SKEW_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taures/perf_element.hpp"

namespace taures {

/// Twisted Laurent series sum_i tau^i a_i in right-coefficient normal form,
/// subject to tau a = a^q tau and sigma = tau^{-1}.
///
/// A truncated value carries a floor F: every coefficient at tau-degree
/// below F is unknown. Exact values have no floor. Coefficients at or above
/// the floor are always exact.
class SkewLaurent {
 public:
  using Coeffs = std::map<std::int64_t, PerfElement>;

  explicit SkewLaurent(FieldPtr field);

  static SkewLaurent zero(FieldPtr field) { return SkewLaurent(std::move(field)); }
  static SkewLaurent one(FieldPtr field);
  static SkewLaurent scalar(const PerfElement& a);
  /// tau^k * a.
  static SkewLaurent monomial(std::int64_t k, const PerfElement& a);
  /// tau^k (sigma^{-k} for negative k).
  static SkewLaurent tau_power(FieldPtr field, std::int64_t k);
  /// Zero known above `floor`, unknown below it.
  static SkewLaurent unknown_below(FieldPtr field, std::int64_t floor);
  /// Normal form of sum_i a_i tau^i given left coefficients (a_i, i).
  static SkewLaurent from_left_coeffs(
      FieldPtr field, const std::vector<std::pair<PerfElement, std::int64_t>>& terms);

  const FieldPtr& field() const noexcept { return field_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  /// nullopt for exact values.
  const std::optional<std::int64_t>& floor() const noexcept { return floor_; }
  bool is_exact() const noexcept { return !floor_.has_value(); }
  /// True when no coefficient is known to be nonzero.
  bool known_zero() const noexcept { return coeffs_.empty(); }
  /// Exact zero.
  bool is_zero() const noexcept { return coeffs_.empty() && !floor_; }

  /// Max stored exponent; nullopt stands for -infinity.
  std::optional<std::int64_t> deg_tau() const;
  /// Min stored exponent; nullopt for an empty coefficient map.
  std::optional<std::int64_t> ord() const;

  /// Right coefficient of tau^i. Throws PrecisionError below the floor.
  PerfElement coeff(std::int64_t i) const;

  /// Drops everything below `floor`; the result is known only from there.
  SkewLaurent truncated(std::int64_t floor) const;

  SkewLaurent operator-() const;
  SkewLaurent& operator+=(const SkewLaurent& b);
  SkewLaurent& operator-=(const SkewLaurent& b);
  friend SkewLaurent operator+(SkewLaurent a, const SkewLaurent& b) { return a += b; }
  friend SkewLaurent operator-(SkewLaurent a, const SkewLaurent& b) { return a -= b; }
  friend SkewLaurent operator*(const SkewLaurent& f, const SkewLaurent& g);

  /// Structural equality: same coefficients and same floor.
  friend bool operator==(const SkewLaurent& a, const SkewLaurent& b);

  /// Canonical text in increasing tau-degree, e.g.
  /// "sigma^2 * theta^(1/2) + 1 + tau * theta + O(sigma^3)".
  std::string render() const;

 private:
  void normalize();

  FieldPtr field_;
  Coeffs coeffs_;
  std::optional<std::int64_t> floor_;
};

/// Product f*g with terms below `limit` discarded. The result floor is at
/// least `limit` unless the product is exact with no terms below it.
SkewLaurent mul(const SkewLaurent& f, const SkewLaurent& g,
                std::optional<std::int64_t> limit = std::nullopt);

/// Compares only coefficients at or above the larger of the two floors.
bool equal_to_precision(const SkewLaurent& a, const SkewLaurent& b);

/// f^{-1} with P correct terms below its leading degree: the result floor
/// is -deg_tau(f) - P + 1. Throws ArithmeticError on a zero input and
/// PrecisionError when f is not known down to deg_tau(f) - P + 1.
SkewLaurent invert_scalar(const SkewLaurent& f, std::int64_t P);

/// "O(sigma^N)" for the unknown tail below `floor`.
std::string render_big_o(std::int64_t floor);

}  // namespace taures

#endif  // TAURES_SKEW_LAURENT_HPP
