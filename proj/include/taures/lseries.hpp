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


#ifndef TAURES_LSERIES_HPP
#define TAURES_LSERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "taures/anderson.hpp"
#include "taures/finite_field.hpp"
#include "taures/fq_poly.hpp"

namespace taures {

/// A finite extension k = F_q[alpha]/(h) of degree n. Elements are
/// coordinate vectors of length n in the power basis 1, alpha, ...
class ExtField {
 public:
  using Elem = std::vector<Fq>;

  /// With no modulus, h is the first monic irreducible polynomial of degree
  /// n in the enumeration order of its coefficient codes.
  static ExtField make(FieldPtr base, std::size_t degree,
                       std::optional<std::vector<Fq>> modulus = std::nullopt);

  const FieldPtr& base() const noexcept { return base_; }
  std::size_t degree() const noexcept { return n_; }
  /// Monic modulus, low to high degree.
  const std::vector<Fq>& modulus() const noexcept { return h_; }
  /// q^n.
  std::uint64_t order() const noexcept { return order_; }

  Elem zero() const { return Elem(n_); }
  Elem one() const;
  Elem from_base(Fq c) const;
  Elem alpha() const;
  /// Element with the given index in 0 .. q^n - 1 (base-q digits).
  Elem from_index(std::uint64_t i) const;
  bool is_zero(const Elem& a) const;
  /// The F_q value when a lies in the base field.
  std::optional<Fq> as_base(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, Fq c) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  /// a^{q^k}; negative k is taken mod n.
  Elem frobenius(const Elem& a, std::int64_t k) const;

  /// "alpha^2 + z*alpha - 1" style rendering.
  std::string render(const Elem& a) const;

 private:
  ExtField(FieldPtr base, std::vector<Fq> h);

  FieldPtr base_;
  std::size_t n_ = 0;
  std::vector<Fq> h_;
  std::uint64_t order_ = 1;
};

/// True when the monic polynomial h (low to high) is irreducible over F_q.
bool is_irreducible_over(const FiniteField& f, const std::vector<Fq>& h);

/// Dense polynomial in t over k, low to high, no trailing zeros.
using KPoly = std::vector<ExtField::Elem>;

enum class Side { kMotive, kComotive };

/// The tau-action on a declared k[t]-basis: column i holds the coordinates
/// of tau applied to basis element i. On the motive side tau is
/// q-semilinear over k, on the comotive side q^{-1}-semilinear.
struct SemilinearMatrix {
  Side side = Side::kMotive;
  std::vector<std::vector<KPoly>> entries;

  std::size_t size() const noexcept { return entries.size(); }
};

/// Polynomial in T over F_q[t]; by_T[j] is the coefficient of T^j.
struct BivariatePoly {
  std::vector<FqPoly> by_T;

  std::size_t T_degree() const noexcept {
    return by_T.empty() ? 0 : by_T.size() - 1;
  }
  std::uint64_t t_degree() const;
  /// Value at T = c.
  FqPoly at_T(const FiniteField& f, Fq c) const;
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
  /// Descending in T, e.g. "T^2 + t^2", "T - t + 1".
  std::string render(const FiniteField& f) const;
};

/// Descending powers of t with F_q coefficients, e.g. "t^2 + 1".
std::string render_tpoly(const FiniteField& f, const FqPoly& a);
/// Same in another variable.
std::string render_fq_poly(const FiniteField& f, const FqPoly& a, const std::string& var);

/// Drinfeld module Phi(t) = theta + g_1 tau + ... + g_r tau^r over k (left
/// coefficients) with the basis 1, tau, ..., tau^{r-1} on both sides.
struct DrinfeldData {
  ExtField::Elem theta;
  std::vector<ExtField::Elem> g;
};

/// Motive and comotive tau-matrices of a Drinfeld module.
std::pair<SemilinearMatrix, SemilinearMatrix> drinfeld_tau_matrices(
    const ExtField& k, const DrinfeldData& e);

/// Converts a declared tau-matrix of a module over F_q; every coefficient
/// must lie in F_q.
SemilinearMatrix tau_matrix_over(const ExtField& k, const TauMatrix& m, Side side);

/// The tau-matrices of an Anderson module over a finite base: declared ones
/// when present, derived ones for Drinfeld modules with the standard basis.
/// Throws ValidationError when neither is available.
std::pair<SemilinearMatrix, SemilinearMatrix> module_tau_matrices(
    const ExtField& k, const AndersonModule& e);

/// Checks that tau acts on the declared basis as the matrix says:
/// tau * e_i = sum_l T_{li} . e_l (motive) or e_i * tau = sum_l T_{li} . e_l
/// (comotive), with t acting through Phi(t).
bool tau_matrix_consistent(const AndersonModule& e, const TauMatrix& m, Side side);

/// det(T - tau) for the F_q[t]-linear restriction of tau to an F_q-basis of
/// k tensored with the module basis. `basis` defaults to the power basis.
BivariatePoly fitting_ideal(const ExtField& k, const SemilinearMatrix& tau,
                            const std::vector<ExtField::Elem>* basis = nullptr);

/// det_{k[t][T]}(T^n - tau^n), the n-th iterate being k-linear. Throws
/// DomainError if a coefficient fails to descend to F_q.
BivariatePoly fitting_ideal_via_power(const ExtField& k, const SemilinearMatrix& tau);

/// Phi(t) as d x d matrix of additive polynomials over k: ops[i][j][m] is
/// the coefficient of x^{q^m}.
using AdditiveMatrix = std::vector<std::vector<std::vector<ExtField::Elem>>>;

AdditiveMatrix additive_matrix(const ExtField& k, const DrinfeldData& e);
AdditiveMatrix additive_matrix(const ExtField& k, const AndersonModule& e);

/// Characteristic polynomial of t on E(k) = k^d as an F_q-linear map,
/// monic in t. Limited to d * n <= 16.
FqPoly brute_force_fitting(const ExtField& k, const AdditiveMatrix& phi);

/// a = c * b for some c in F_q^x.
bool equal_up_to_unit(const FiniteField& f, const FqPoly& a, const FqPoly& b);

struct LSeriesReport {
  BivariatePoly motive;
  BivariatePoly comotive;
  std::optional<FqPoly> points;  // absent when d * n > 16
  bool consistent = false;

  /// "motive: ...", "comotive: ...", "E(k) fitting: ...", "consistent: ...".
  std::string render(const FiniteField& f) const;
};

/// Both Fitting ideals, the power-map oracle and, when small enough, the
/// brute-force comparison at T = 1.
LSeriesReport lseries_report(const ExtField& k, const SemilinearMatrix& motive,
                             const SemilinearMatrix& comotive,
                             const AdditiveMatrix& phi);

}  // namespace taures

#endif  // TAURES_LSERIES_HPP
