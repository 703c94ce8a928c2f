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


#ifndef TAURES_ANDERSON_HPP
#define TAURES_ANDERSON_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taures/skew_matrix.hpp"
#include "taures/tpoly.hpp"

namespace taures {

enum class BaseKind { kPerfRational, kFiniteField };

/// r x r matrix over F_q[t] for the action of tau on a declared basis;
/// column i holds the coordinates of tau * (basis element i).
using TauMatrix = std::vector<std::vector<TPoly>>;

/// An Anderson t-module over R = F_q or the perfection of F_q(theta),
/// given by Phi(t) in Mat_d(R[tau]) and declared bases of the motive and
/// comotive.
struct AndersonModule {
  FieldPtr field;
  BaseKind base = BaseKind::kPerfRational;
  PerfElement theta;
  std::size_t dim = 0;
  SkewMatrix phi_t;
  std::vector<SkewMatrix> motive_basis;    // 1 x d rows
  std::vector<SkewMatrix> comotive_basis;  // d x 1 columns
  std::optional<std::size_t> rank_hint;
  std::optional<TauMatrix> tau_motive;
  std::optional<TauMatrix> tau_comotive;

  std::size_t rank() const { return motive_basis.size(); }
};

struct ValidationReport {
  bool ok = true;
  /// First violated condition, empty when ok.
  std::string failure;
  /// Names of the checks that ran, in order.
  std::vector<std::string> checks;
};

/// Nilpotency of Phi_0 - theta I, shapes, R[tau]-membership and basis sizes.
ValidationReport validate(const AndersonModule& e);

/// Throws ValidationError carrying the first failure.
void require_valid(const AndersonModule& e);

/// Phi(a) for a in F_q[t]; throws DomainError for other coefficients.
SkewMatrix phi_of_poly(const AndersonModule& e, const TPoly& a);

/// Bounds shared by the convergence search and the pairing.
struct Limits {
  std::int64_t precision_cap = 64;
  std::int64_t k_cap = 64;
};

/// Phi(t)^{-k} for k = 1..kmax, each known down to tau^{-P}; kept in memory
/// so later requests reuse it.
class InverseTower {
 public:
  InverseTower(const AndersonModule& e, Limits limits);

  /// Makes Y_1..Y_kmax available to floor -P (recomputes if needed).
  void ensure(std::int64_t kmax, std::int64_t P);
  /// Y_k; requires a prior ensure covering k.
  const SkewMatrix& power(std::int64_t k) const;
  std::int64_t kmax() const noexcept { return kmax_; }
  std::int64_t precision() const noexcept { return P_; }
  /// Degree of Phi(t)^{-1} (known part); nullopt for -infinity.
  std::optional<std::int64_t> inverse_degree() const noexcept { return dx_; }

 private:
  const AndersonModule* e_;
  Limits limits_;
  std::int64_t kmax_ = 0;
  std::int64_t P_ = -1;
  std::optional<std::int64_t> dx_;
  bool have_dx_ = false;
  std::vector<SkewMatrix> powers_;
};

/// Phi(t)^{-k} known down to tau^{-P}.
SkewMatrix phi_inverse_power(const AndersonModule& e, std::int64_t k,
                             std::int64_t P, Limits limits = {});

struct ConvergenceData {
  /// Least k with sigma_order(Phi(t)^{-k}) >= 1.
  std::int64_t k1 = 0;
  /// Max deg_tau of Phi(t)^{-s} over 0 <= s < k1 (at least 0).
  std::int64_t dmax = 0;
  /// sigma_order of Phi(t)^{-k} for k = 1..k1; nullopt means +infinity.
  std::vector<std::optional<std::int64_t>> orders;
};

/// Searches k = 1..k_cap; throws ConvergenceError past the cap.
ConvergenceData find_convergence(const AndersonModule& e, Limits limits = {});
std::int64_t find_k1(const AndersonModule& e, Limits limits = {});

/// Highest tau-degree among the entries of the given rows or columns.
std::int64_t max_basis_degree(const std::vector<SkewMatrix>& basis);

namespace builtin {

/// Phi(t) = theta + tau.
AndersonModule carlitz(FieldPtr field, BaseKind base, const PerfElement& theta);
/// The d-th tensor power of the Carlitz module with bases kappa_1, check-kappa_d.
AndersonModule carlitz_tensor(FieldPtr field, BaseKind base,
                              const PerfElement& theta, std::size_t d);
/// Phi(t) = theta + g_1 tau + ... + g_r tau^r with bases 1, tau, ..., tau^{r-1}.
AndersonModule drinfeld(FieldPtr field, BaseKind base, const PerfElement& theta,
                        const std::vector<PerfElement>& g);
/// The dimension 2, rank 3 module with Phi(t) = [[theta + tau^2, tau^3],
/// [1 + tau, theta + tau^2]].
AndersonModule maurischat(FieldPtr field, BaseKind base, const PerfElement& theta);

}  // namespace builtin

}  // namespace taures

#endif  // TAURES_ANDERSON_HPP
