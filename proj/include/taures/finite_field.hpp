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

#ifndef TAURES_FINITE_FIELD_HPP
#define TAURES_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace taures {

/// An element of F_q, encoded as sum_i c_i p^i where (c_i) are its
/// coordinates in the polynomial basis 1, z, ..., z^{m-1}.
struct Fq {
  std::uint32_t code = 0;

  friend bool operator==(Fq, Fq) = default;
  friend auto operator<=>(Fq, Fq) = default;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// F_q = F_p[z]/(modulus). Immutable; arithmetic is table driven, so q is
/// limited to kMaxOrder.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1024;

  /// `modulus` holds coefficients over F_p from low to high degree and must
  /// be monic and irreducible; both facts are checked.
  static FieldPtr make(std::uint32_t p, std::vector<std::uint32_t> modulus);

  /// The prime field F_p with modulus z.
  static FieldPtr prime(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept {
    return modulus_;
  }

  Fq zero() const noexcept { return Fq{0}; }
  Fq one() const noexcept { return Fq{1}; }
  Fq from_int(std::int64_t v) const;
  /// The class of z. Equals minus the constant term of the modulus if m = 1.
  Fq generator() const noexcept { return generator_; }

  Fq add(Fq a, Fq b) const noexcept { return Fq{add_[a.code * q_ + b.code]}; }
  Fq sub(Fq a, Fq b) const noexcept {
    return Fq{add_[a.code * q_ + neg_[b.code]]};
  }
  Fq neg(Fq a) const noexcept { return Fq{neg_[a.code]}; }
  Fq mul(Fq a, Fq b) const noexcept { return Fq{mul_[a.code * q_ + b.code]}; }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const noexcept;

  std::vector<std::uint32_t> digits(Fq a) const;
  Fq from_digits(std::span<const std::uint32_t> d) const;
  bool in_prime_field(Fq a) const noexcept { return a.code < p_; }

  /// Integer in the symmetric range (-p/2, p/2], e.g. p - 1 -> -1 for odd p.
  static std::int64_t symmetric(std::uint32_t residue, std::uint32_t p);

  /// Polynomial in z with symmetric decimal coefficients, e.g. "z + 1", "-1".
  std::string render(Fq a) const;
  /// True when render(a) is a sum of two or more monomials.
  bool is_compound(Fq a) const;

  bool same_as(const FiniteField& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Fq generator_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

bool is_prime(std::uint32_t n);

/// Trial factorization over F_p: no monic factor of degree 1..deg/2.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace taures

#endif  // TAURES_FINITE_FIELD_HPP
