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


#include "taures/anderson.hpp"

#include <algorithm>

#include "taures/errors.hpp"

namespace taures {

namespace {

using PerfMatrix = std::vector<std::vector<PerfElement>>;

PerfMatrix perf_mul(const PerfMatrix& a, const PerfMatrix& b, const FieldPtr& f) {
  const std::size_t n = a.size();
  PerfMatrix c(n, std::vector<PerfElement>(n, PerfElement::zero(f)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

bool coefficients_in_fq(const SkewMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& [k, c] : m.at(i, j).coeffs()) {
        if (!c.as_fq()) return false;
      }
    }
  }
  return true;
}

// Truncates only the entries that are already truncated.
SkewMatrix truncate_inexact(SkewMatrix m, std::int64_t floor) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_exact()) m.at(i, j) = m.at(i, j).truncated(floor);
    }
  }
  return m;
}

}  // namespace

ValidationReport validate(const AndersonModule& e) {
  ValidationReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.failure = std::move(why);
    return rep;
  };
  const std::size_t d = e.dim;
  rep.checks.push_back("shape");
  if (d == 0) return fail("dimension must be at least 1");
  if (e.phi_t.rows() != d || e.phi_t.cols() != d) {
    return fail("phi(t) must be a " + std::to_string(d) + "x" + std::to_string(d) +
                " matrix");
  }
  rep.checks.push_back("phi(t) in R[tau]");
  if (!e.phi_t.is_polynomial()) return fail("phi(t) must lie in R[tau]");
  if (e.base == BaseKind::kFiniteField) {
    rep.checks.push_back("coefficients in F_q");
    if (!e.theta.as_fq()) return fail("theta must lie in F_q over a finite base");
    if (!coefficients_in_fq(e.phi_t)) {
      return fail("phi(t) has coefficients outside F_q over a finite base");
    }
  }
  rep.checks.push_back("nilpotency");
  PerfMatrix n(d, std::vector<PerfElement>(d, PerfElement::zero(e.field)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) n[i][j] = e.phi_t.at(i, j).coeff(0);
    n[i][i] -= e.theta;
  }
  PerfMatrix pw = n;
  for (std::size_t k = 1; k < d; ++k) pw = perf_mul(pw, n, e.field);
  for (const auto& row : pw) {
    for (const auto& x : row) {
      if (!x.is_zero()) {
        return fail("phi_0 - theta*I is not nilpotent");
      }
    }
  }
  rep.checks.push_back("bases");
  if (e.motive_basis.empty()) return fail("motive basis is empty");
  if (e.motive_basis.size() != e.comotive_basis.size()) {
    return fail("motive basis has " + std::to_string(e.motive_basis.size()) +
                " elements but comotive basis has " +
                std::to_string(e.comotive_basis.size()));
  }
  for (std::size_t i = 0; i < e.motive_basis.size(); ++i) {
    const auto& m = e.motive_basis[i];
    if (m.rows() != 1 || m.cols() != d) {
      return fail("motive basis element " + std::to_string(i + 1) +
                  " must be a row of length " + std::to_string(d));
    }
    if (!m.is_polynomial()) {
      return fail("motive basis element " + std::to_string(i + 1) +
                  " must lie in R[tau]");
    }
  }
  for (std::size_t i = 0; i < e.comotive_basis.size(); ++i) {
    const auto& m = e.comotive_basis[i];
    if (m.rows() != d || m.cols() != 1) {
      return fail("comotive basis element " + std::to_string(i + 1) +
                  " must be a column of length " + std::to_string(d));
    }
    if (!m.is_polynomial()) {
      return fail("comotive basis element " + std::to_string(i + 1) +
                  " must lie in R[tau]");
    }
  }
  if (e.rank_hint && *e.rank_hint != e.motive_basis.size()) {
    return fail("declared rank " + std::to_string(*e.rank_hint) +
                " does not match basis length " +
                std::to_string(e.motive_basis.size()));
  }
  return rep;
}

void require_valid(const AndersonModule& e) {
  const auto rep = validate(e);
  if (!rep.ok) throw ValidationError(rep.failure);
}

SkewMatrix phi_of_poly(const AndersonModule& e, const TPoly& a) {
  for (const auto& [k, c] : a.coeffs()) {
    if (!c.as_fq()) throw DomainError("phi is only defined on F_q[t]");
  }
  const std::size_t d = e.dim;
  SkewMatrix r(e.field, d, d);
  if (a.is_zero()) return r;
  for (std::uint64_t k = a.degree() + 1; k-- > 0;) {
    r = mat_mul(r, e.phi_t);
    r += SkewMatrix::scalar(SkewLaurent::scalar(a.coeff(k)), d);
  }
  return r;
}

InverseTower::InverseTower(const AndersonModule& e, Limits limits)
    : e_(&e), limits_(limits) {}

void InverseTower::ensure(std::int64_t kmax, std::int64_t P) {
  if (kmax <= kmax_ && P <= P_) return;
  kmax = std::max(kmax, kmax_);
  P = std::max(P, P_);
  auto over_cap = [&](std::int64_t px) {
    return PrecisionError("required precision " + std::to_string(px) +
                          " exceeds the precision cap " +
                          std::to_string(limits_.precision_cap));
  };
  if (P > limits_.precision_cap) throw over_cap(P);
  const SkewMatrix& phi = e_->phi_t;
  try {
    if (!have_dx_) {
      const SkewMatrix probe = invert_series_matrix(phi, std::max<std::int64_t>(1, P));
      dx_ = probe.deg_tau();
      have_dx_ = true;
    }
    const std::int64_t dplus = std::max<std::int64_t>(0, dx_.value_or(0));
    const std::int64_t px = P + (kmax - 1) * dplus;
    if (px > limits_.precision_cap) throw over_cap(px);
    const SkewMatrix x = invert_series_matrix(phi, std::max<std::int64_t>(1, px));
    powers_.clear();
    powers_.push_back(truncate_inexact(x, -px));
    for (std::int64_t k = 2; k <= kmax; ++k) {
      const std::int64_t floor = -(P + (kmax - k) * dplus);
      powers_.push_back(truncate_inexact(mat_mul(powers_.back(), x, floor), floor));
    }
  } catch (const DomainError& err) {
    // theta^(q^k) leaves the 64-bit exponent range long before memory does.
    throw PrecisionError("precision " + std::to_string(P) +
                         " is not representable: " + err.what());
  }
  kmax_ = kmax;
  P_ = P;
}

const SkewMatrix& InverseTower::power(std::int64_t k) const {
  if (k < 1 || k > kmax_) throw DomainError("inverse power out of range");
  return powers_[static_cast<std::size_t>(k - 1)];
}

SkewMatrix phi_inverse_power(const AndersonModule& e, std::int64_t k,
                             std::int64_t P, Limits limits) {
  if (k < 1) throw DomainError("inverse power must be at least 1");
  InverseTower tower(e, limits);
  tower.ensure(k, P);
  return tower.power(k);
}

ConvergenceData find_convergence(const AndersonModule& e, Limits limits) {
  require_valid(e);
  InverseTower tower(e, limits);
  ConvergenceData out;
  try {
    for (std::int64_t kmax = 1;; kmax = std::min(2 * kmax, limits.k_cap)) {
      tower.ensure(kmax, 0);
      out.orders.clear();
      for (std::int64_t k = 1; k <= kmax; ++k) {
        const auto ord = sigma_order(tower.power(k));
        out.orders.push_back(ord);
        if (!ord || *ord >= 1) {
          out.k1 = k;
          break;
        }
      }
      if (out.k1 > 0 || kmax >= limits.k_cap) break;
    }
  } catch (const DomainError& err) {
    throw ConvergenceError(std::string("convergence not certified: ") + err.what());
  }
  if (out.k1 == 0) {
    throw ConvergenceError("convergence not certified within k cap " +
                           std::to_string(limits.k_cap));
  }
  out.dmax = 0;
  for (std::int64_t s = 1; s < out.k1; ++s) {
    if (auto deg = tower.power(s).deg_tau()) out.dmax = std::max(out.dmax, *deg);
  }
  return out;
}

std::int64_t find_k1(const AndersonModule& e, Limits limits) {
  return find_convergence(e, limits).k1;
}

std::int64_t max_basis_degree(const std::vector<SkewMatrix>& basis) {
  std::int64_t d = 0;
  for (const auto& b : basis) d = std::max(d, b.deg_tau().value_or(0));
  return d;
}

namespace builtin {

namespace {

SkewMatrix row_unit(const FieldPtr& f, std::size_t d, std::size_t i,
                    const SkewLaurent& x) {
  SkewMatrix m(f, 1, d);
  m.at(0, i) = x;
  return m;
}

SkewMatrix col_unit(const FieldPtr& f, std::size_t d, std::size_t i,
                    const SkewLaurent& x) {
  SkewMatrix m(f, d, 1);
  m.at(i, 0) = x;
  return m;
}

TPoly linear(const PerfElement& a, const PerfElement& b) {
  return TPoly::monomial(a, 1) + TPoly::constant(b);
}

TauMatrix zero_tau(const FieldPtr& f, std::size_t r) {
  return TauMatrix(r, std::vector<TPoly>(r, TPoly(f)));
}

}  // namespace

AndersonModule carlitz(FieldPtr field, BaseKind base, const PerfElement& theta) {
  return drinfeld(std::move(field), base, theta, {PerfElement::one(theta.field())});
}

AndersonModule carlitz_tensor(FieldPtr field, BaseKind base,
                              const PerfElement& theta, std::size_t d) {
  if (d == 0) throw DomainError("tensor power must be at least 1");
  AndersonModule e{field, base, theta, d, SkewMatrix(field, d, d), {}, {}, 1,
                   std::nullopt, std::nullopt};
  const SkewLaurent one = SkewLaurent::one(field);
  for (std::size_t i = 0; i < d; ++i) {
    e.phi_t.at(i, i) = SkewLaurent::scalar(theta);
    if (i + 1 < d) e.phi_t.at(i, i + 1) = one;
  }
  e.phi_t.at(d - 1, 0) += SkewLaurent::tau_power(field, 1);
  e.motive_basis.push_back(row_unit(field, d, 0, one));
  e.comotive_basis.push_back(col_unit(field, d, d - 1, one));
  // tau kappa_1 = (t - theta)^d kappa_1 and check-kappa_d tau likewise.
  const TPoly step = linear(PerfElement::one(field), -theta);
  TPoly power = TPoly::constant(PerfElement::one(field));
  for (std::size_t i = 0; i < d; ++i) power = power * step;
  e.tau_motive = TauMatrix{{power}};
  e.tau_comotive = TauMatrix{{power}};
  return e;
}

AndersonModule drinfeld(FieldPtr field, BaseKind base, const PerfElement& theta,
                        const std::vector<PerfElement>& g) {
  if (g.empty() || g.back().is_zero()) {
    throw DomainError("a Drinfeld module needs g_r != 0");
  }
  const std::size_t r = g.size();
  AndersonModule e{field, base, theta, 1, SkewMatrix(field, 1, 1), {}, {}, r,
                   std::nullopt, std::nullopt};
  std::vector<std::pair<PerfElement, std::int64_t>> terms{{theta, 0}};
  for (std::size_t i = 0; i < r; ++i) {
    terms.emplace_back(g[i], static_cast<std::int64_t>(i + 1));
  }
  e.phi_t.at(0, 0) = SkewLaurent::from_left_coeffs(field, terms);
  for (std::size_t i = 0; i < r; ++i) {
    const auto t = SkewLaurent::tau_power(field, static_cast<std::int64_t>(i));
    e.motive_basis.push_back(row_unit(field, 1, 0, t));
    e.comotive_basis.push_back(col_unit(field, 1, 0, t));
  }
  // tau^r = g_r^{-1}(t - theta - sum g_l tau^l); on the comotive side the
  // scalars sit on the right and pick up q^{-l} twists.
  TauMatrix mot = zero_tau(field, r);
  TauMatrix com = zero_tau(field, r);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    mot[i + 1][i] = TPoly::constant(PerfElement::one(field));
    com[i + 1][i] = mot[i + 1][i];
  }
  const PerfElement u = g.back().inverse();
  const PerfElement w = u.frobenius(-static_cast<std::int64_t>(r));
  mot[0][r - 1] = linear(u, -(theta * u));
  com[0][r - 1] = linear(w, -(theta * w));
  for (std::size_t l = 1; l < r; ++l) {
    mot[l][r - 1] = TPoly::constant(-(g[l - 1] * u));
    com[l][r - 1] =
        TPoly::constant(-(g[l - 1].frobenius(-static_cast<std::int64_t>(l)) * w));
  }
  e.tau_motive = std::move(mot);
  e.tau_comotive = std::move(com);
  return e;
}

AndersonModule maurischat(FieldPtr field, BaseKind base, const PerfElement& theta) {
  AndersonModule e{field, base, theta, 2, SkewMatrix(field, 2, 2), {}, {}, 3,
                   std::nullopt, std::nullopt};
  const SkewLaurent one = SkewLaurent::one(field);
  const SkewLaurent tau = SkewLaurent::tau_power(field, 1);
  const SkewLaurent th = SkewLaurent::scalar(theta);
  e.phi_t.at(0, 0) = th + SkewLaurent::tau_power(field, 2);
  e.phi_t.at(0, 1) = SkewLaurent::tau_power(field, 3);
  e.phi_t.at(1, 0) = one + tau;
  e.phi_t.at(1, 1) = th + SkewLaurent::tau_power(field, 2);
  // e_1 = tau kappa_2, e_2 = kappa_2, e_3 = kappa_1
  e.motive_basis = {row_unit(field, 2, 1, tau), row_unit(field, 2, 1, one),
                    row_unit(field, 2, 0, one)};
  // e_1 = check-kappa_1 tau, e_2 = check-kappa_1, e_3 = check-kappa_2
  e.comotive_basis = {col_unit(field, 2, 0, tau), col_unit(field, 2, 0, one),
                      col_unit(field, 2, 1, one)};
  // From t e_2 = e_3 + theta e_2 + tau kappa_1 + tau^2 kappa_2 and its tau
  // image; the comotive side is the same with theta^q replaced by theta^(1/q).
  const PerfElement o = PerfElement::one(field);
  auto side = [&](const PerfElement& tw) {
    TauMatrix m = zero_tau(field, 3);
    m[0][0] = linear(-o, tw);
    m[1][0] = linear(o, -theta);
    m[2][0] = linear(o, -theta - o);
    m[0][1] = TPoly::constant(o);
    m[0][2] = linear(o, -tw);
    m[2][2] = linear(-o, theta);
    return m;
  };
  e.tau_motive = side(theta.frobenius(1));
  e.tau_comotive = side(theta.frobenius(-1));
  return e;
}

}  // namespace builtin

}  // namespace taures
