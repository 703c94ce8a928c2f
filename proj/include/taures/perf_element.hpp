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

#ifndef TAURES_PERF_ELEMENT_HPP
#define TAURES_PERF_ELEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "taures/finite_field.hpp"
#include "taures/fq_poly.hpp"

namespace taures {

/// An element of the perfection of F_q(theta): the value num/den evaluated
/// at theta^{1/q^level}.
///
/// Canonical form: gcd(num, den) = 1, den monic, and the level is minimal,
/// i.e. num and den are not both polynomials in x^q when level > 0. Every
/// element has exactly one canonical form, so equality is structural.
///
/// Elements with constant num and den form the subfield F_q; they also serve
/// as the coefficient ring when the base is a finite field.
class PerfElement {
 public:
  explicit PerfElement(FieldPtr field);

  static PerfElement zero(FieldPtr field) { return PerfElement(std::move(field)); }
  static PerfElement one(FieldPtr field);
  static PerfElement from_int(FieldPtr field, std::int64_t v);
  static PerfElement from_fq(FieldPtr field, Fq c);
  /// The transcendental theta (x at level 0).
  static PerfElement theta(FieldPtr field);
  /// Canonicalizes (num/den)(theta^{1/q^level}); throws on den = 0.
  static PerfElement from_fraction(FieldPtr field, FqPoly num, FqPoly den,
                                   std::uint32_t level);

  const FieldPtr& field() const noexcept { return field_; }
  const FiniteField& ff() const noexcept { return *field_; }
  const FqPoly& num() const noexcept { return num_; }
  const FqPoly& den() const noexcept { return den_; }
  std::uint32_t level() const noexcept { return level_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  /// The F_q value if this element is a constant.
  std::optional<Fq> as_fq() const;

  PerfElement operator-() const;
  PerfElement& operator+=(const PerfElement& b);
  PerfElement& operator-=(const PerfElement& b);
  PerfElement& operator*=(const PerfElement& b);
  PerfElement& operator/=(const PerfElement& b);
  friend PerfElement operator+(PerfElement a, const PerfElement& b) { return a += b; }
  friend PerfElement operator-(PerfElement a, const PerfElement& b) { return a -= b; }
  friend PerfElement operator*(PerfElement a, const PerfElement& b) { return a *= b; }
  friend PerfElement operator/(PerfElement a, const PerfElement& b) { return a /= b; }

  PerfElement inverse() const;
  PerfElement pow(std::uint64_t n) const;

  /// a^{q^k} for any integer k; negative k takes iterated q-th roots.
  PerfElement frobenius(std::int64_t k) const;

  friend bool operator==(const PerfElement& a, const PerfElement& b) {
    return a.level_ == b.level_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical text, e.g. "(theta^(2/3) + 1)/theta^(1/3)".
  std::string render() const;
  /// Rendering suitable as a factor in a product: no top-level sum, no
  /// leading sign. Returns nullopt if the element needs parentheses. When
  /// `negated` is set, the factor renders -a instead and the caller
  /// supplies the sign.
  struct Factor {
    bool negated;
    std::string text;
  };
  std::optional<Factor> render_factor() const;

 private:
  void canonicalize();
  void check_same_field(const PerfElement& b) const;
  /// Rewrites num/den at a higher level without changing the value.
  std::pair<FqPoly, FqPoly> lifted(std::uint32_t level) const;

  FieldPtr field_;
  FqPoly num_;
  FqPoly den_;
  std::uint32_t level_ = 0;
};

/// Exact field arithmetic with an explicit operator tag.
enum class FieldOp { kAdd, kSub, kMul, kDiv };
PerfElement field_arith(const PerfElement& a, const PerfElement& b, FieldOp op);

/// a^q.
PerfElement q_pow(const PerfElement& a);
/// The unique b with b^q = a.
PerfElement q_root(const PerfElement& a);
/// The stored minimal level e.
std::uint32_t perfection_level(const PerfElement& a);

/// q^k with overflow check.
std::uint64_t q_power(std::uint32_t q, std::uint64_t k);

}  // namespace taures

#endif  // TAURES_PERF_ELEMENT_HPP
