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

#ifndef TAURES_FQ_POLY_HPP
#define TAURES_FQ_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "taures/finite_field.hpp"

namespace taures {

/// Sparse univariate polynomial over F_q. Terms are kept sorted by
/// increasing exponent with no zero coefficients, so structural equality is
/// polynomial equality. Exponents of q-power substitutions grow fast, which
/// is why the representation is sparse.
class FqPoly {
 public:
  struct Term {
    std::uint64_t exp;
    Fq coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  FqPoly() = default;
  static FqPoly constant(Fq c);
  static FqPoly monomial(Fq c, std::uint64_t exp);
  /// Takes unsorted terms, merges duplicates and drops zeros.
  static FqPoly from_terms(const FiniteField& f, std::vector<Term> terms);
  /// Adopts terms that are already strictly increasing and nonzero.
  static FqPoly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
  }
  bool is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coef.code == 1;
  }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Degree; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept {
    return terms_.empty() ? 0 : terms_.back().exp;
  }
  Fq lead() const noexcept { return terms_.empty() ? Fq{} : terms_.back().coef; }
  Fq constant_term() const noexcept {
    return (!terms_.empty() && terms_[0].exp == 0) ? terms_[0].coef : Fq{};
  }

  friend bool operator==(const FqPoly&, const FqPoly&) = default;

 private:
  std::vector<Term> terms_;
};

namespace poly {

FqPoly add(const FiniteField& f, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FiniteField& f, const FqPoly& a, const FqPoly& b);
FqPoly neg(const FiniteField& f, const FqPoly& a);
FqPoly scale(const FiniteField& f, const FqPoly& a, Fq c);
FqPoly mul(const FiniteField& f, const FqPoly& a, const FqPoly& b);

/// Quotient and remainder; throws ArithmeticError when b = 0.
std::pair<FqPoly, FqPoly> divmod(const FiniteField& f, const FqPoly& a,
                                 const FqPoly& b);
/// a / b where b is known to divide a.
FqPoly exact_div(const FiniteField& f, const FqPoly& a, const FqPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FqPoly gcd(const FiniteField& f, const FqPoly& a, const FqPoly& b);
FqPoly make_monic(const FiniteField& f, const FqPoly& a);

/// x -> x^k.
FqPoly inflate(const FqPoly& a, std::uint64_t k);
/// Inverse of inflate; every exponent must be divisible by k.
FqPoly deflate(const FqPoly& a, std::uint64_t k);
/// True when every exponent is divisible by k.
bool divisible_exponents(const FqPoly& a, std::uint64_t k);
/// x -> x^{-v} shift; v must not exceed the lowest exponent.
FqPoly shift_down(const FqPoly& a, std::uint64_t v);

}  // namespace poly

}  // namespace taures

#endif  // TAURES_FQ_POLY_HPP
