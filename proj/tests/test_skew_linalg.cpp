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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "families.hpp"
#include "taures/errors.hpp"
#include "taures/skew_matrix.hpp"

using namespace taures;
using namespace taures::testing;

namespace {

SkewLaurent tau(const FieldPtr& f, std::int64_t k) {
  return SkewLaurent::tau_power(f, k);
}

SkewMatrix one_by_one(const SkewLaurent& x) {
  SkewMatrix m(x.field(), 1, 1);
  m.at(0, 0) = x;
  return m;
}

bool is_identity_to_precision(const SkewMatrix& a) {
  return equal_to_precision(a, SkewMatrix::identity(a.field(), a.rows()));
}

SkewMatrix random_matrix(const FieldPtr& f, std::size_t n, bool truncate) {
  SkewMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      SkewLaurent x = random_skew(f, -2, 2, 2, 1, 1, false);
      if (truncate && rng()() % 2 == 0) {
        x = x.truncated(-static_cast<std::int64_t>(rng()() % 3));
      }
      m.at(i, j) = x;
    }
  }
  return m;
}

// Right coefficients of Phi^{-1} for Phi = theta + sum g_i tau^i (left
// coefficients), from expanding (g_r tau^r (1 + X))^{-1} as a geometric
// series: the sigma^{r+m} coefficient is
// g_r^{-1} * sum over compositions of m of (-1)^n prod h_{v_s}^{q^{v_s+...+v_n}}
// with h_v = g_{r-v}/g_r and g_0 = theta.
PerfElement drinfeld_inverse_coeff(const PerfElement& theta,
                                   const std::vector<PerfElement>& g,
                                   std::int64_t m) {
  const FieldPtr& f = theta.field();
  const auto r = static_cast<std::int64_t>(g.size());
  auto h = [&](std::int64_t v) {
    return (v == r ? theta : g[static_cast<std::size_t>(r - v - 1)]) / g.back();
  };
  PerfElement total = PerfElement::zero(f);
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t)> walk = [&](std::int64_t rest) {
    if (rest == 0) {
      PerfElement term = PerfElement::one(f);
      std::int64_t suffix = 0;
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        suffix += *it;
        term *= h(*it).frobenius(suffix);
      }
      total += parts.size() % 2 == 0 ? term : -term;
      return;
    }
    for (std::int64_t v = 1; v <= std::min(rest, r); ++v) {
      parts.push_back(v);
      walk(rest - v);
      parts.pop_back();
    }
  };
  walk(m);
  return total / g.back();
}

}  // namespace

TEST_CASE("mat_mul basics") {
  const auto f = FiniteField::prime(3);
  for (int it = 0; it < 50; ++it) {
    const SkewMatrix a = random_matrix(f, 2, false);
    CHECK(mat_mul(SkewMatrix::identity(f, 2), a) == a);
    CHECK(mat_mul(a, SkewMatrix::identity(f, 2)) == a);
    const SkewLaurent x = random_skew(f, -2, 2);
    const SkewLaurent y = random_skew(f, -2, 2);
    CHECK(mat_mul(one_by_one(x), one_by_one(y)).at(0, 0) == x * y);
  }
  CHECK_THROWS_AS(mat_mul(SkewMatrix(f, 2, 3), SkewMatrix(f, 2, 3)), DimensionError);
}

TEST_CASE("mat_mul keeps the left factor on the left") {
  const auto f = FiniteField::prime(3);
  const PerfElement th = PerfElement::theta(f);
  SkewMatrix a(f, 1, 2);
  a.at(0, 0) = tau(f, 1);
  a.at(0, 1) = SkewLaurent::scalar(th);
  SkewMatrix b(f, 2, 1);
  b.at(0, 0) = SkewLaurent::scalar(th);
  b.at(1, 0) = tau(f, 1);
  // tau*theta + theta*tau = tau*theta + tau*theta^(1/3)
  const SkewLaurent expected =
      SkewLaurent::monomial(1, th) + SkewLaurent::monomial(1, q_root(th));
  CHECK(mat_mul(a, b).at(0, 0) == expected);
}

TEST_CASE("sigma_order examples") {
  const auto f = FiniteField::prime(2);
  CHECK(sigma_order(SkewMatrix::identity(f, 3)) == 0);
  CHECK(sigma_order(SkewMatrix::scalar(tau(f, -1), 3)) == 1);
  CHECK_FALSE(sigma_order(SkewMatrix(f, 2, 2)).has_value());
  const auto c = builtin::carlitz(f, BaseKind::kPerfRational, PerfElement::theta(f));
  CHECK(sigma_order(invert_series_matrix(c.phi_t, 4)) == 1);
  // An unknown tail bounds the order: O(sigma) could hide tau^0 terms.
  CHECK(sigma_order(one_by_one(SkewLaurent::unknown_below(f, 1))) == 0);
  CHECK(sigma_order(one_by_one(SkewLaurent::unknown_below(f, 0))) == 1);
}

TEST_CASE("sigma_order is superadditive") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    for (int it = 0; it < 300; ++it) {
      const SkewMatrix a = random_matrix(f, 2, true);
      const SkewMatrix b = random_matrix(f, 2, true);
      const auto oa = sigma_order(a);
      const auto ob = sigma_order(b);
      const auto oab = sigma_order(mat_mul(a, b));
      if (!oa || !ob) {
        CHECK(!oab.has_value());
        continue;
      }
      if (oab) CHECK(*oab >= *oa + *ob);
    }
  }
}

TEST_CASE("invert theta + tau") {
  const auto f = FiniteField::prime(3);
  const PerfElement th = PerfElement::theta(f);
  const auto c = builtin::carlitz(f, BaseKind::kPerfRational, th);
  const SkewMatrix x = invert_series_matrix(c.phi_t, 3);
  CHECK(x.at(0, 0).render() ==
        "sigma^3 * theta^12 - sigma^2 * theta^3 + sigma + O(sigma^4)");
  CHECK(is_identity_to_precision(mat_mul(c.phi_t, x)));
  CHECK(is_identity_to_precision(mat_mul(x, c.phi_t)));
}

TEST_CASE("Carlitz tensor powers: C0 + sigma D") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    const PerfElement th = PerfElement::theta(f);
    const PerfElement mth = -th;
    for (std::size_t d = 1; d <= 5; ++d) {
      const auto e = builtin::carlitz_tensor(f, BaseKind::kPerfRational, th, d);
      const SkewMatrix x = invert_series_matrix(e.phi_t, 3);
      CHECK(is_identity_to_precision(mat_mul(e.phi_t, x)));
      CHECK(is_identity_to_precision(mat_mul(x, e.phi_t)));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const SkewLaurent& y = x.at(i, j);
          // C0: zero on and above the diagonal, (-theta)^{i-1-j} below it.
          const PerfElement c0 = i > j ? mth.pow(i - 1 - j) : PerfElement::zero(f);
          CHECK(y.coeff(0) == c0);
          CHECK(y.coeff(1).is_zero());
          // Lowest term of sigma D: (-theta)^{q i} (-theta)^{d-1-j}.
          CHECK(y.coeff(-1) == mth.pow(q * i) * mth.pow(d - 1 - j));
        }
      }
      CHECK(x.at(0, d - 1).coeff(-1).is_one());
    }
  }
}

TEST_CASE("Drinfeld inversion matches the composition expansion") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    const PerfElement th = PerfElement::theta(f);
    for (int it = 0; it < 12; ++it) {
      const std::size_t r = 1 + it % 4;
      const auto g = random_drinfeld_coeffs(f, r, it % 3 == 2);
      const auto e = builtin::drinfeld(f, BaseKind::kPerfRational, th, g);
      const std::int64_t P = static_cast<std::int64_t>(r) + 3;
      const SkewMatrix x = invert_series_matrix(e.phi_t, P);
      const SkewLaurent& y = x.at(0, 0);
      CHECK(is_identity_to_precision(mat_mul(e.phi_t, x)));
      CHECK(is_identity_to_precision(mat_mul(x, e.phi_t)));
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(r); ++k) {
        CHECK(y.coeff(-k).is_zero());
      }
      for (std::int64_t m = 0; static_cast<std::int64_t>(r) + m <= P; ++m) {
        CHECK(y.coeff(-static_cast<std::int64_t>(r) - m) ==
              drinfeld_inverse_coeff(th, g, m));
      }
    }
  }
}

TEST_CASE("round trips on built-in examples") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    const PerfElement th = PerfElement::theta(f);
    std::vector<AndersonModule> es{
        builtin::carlitz(f, BaseKind::kPerfRational, th),
        builtin::maurischat(f, BaseKind::kPerfRational, th),
        builtin::drinfeld(f, BaseKind::kPerfRational, th,
                          {PerfElement::one(f), th})};
    for (std::size_t d = 2; d <= 5; ++d) {
      es.push_back(builtin::carlitz_tensor(f, BaseKind::kPerfRational, th, d));
    }
    for (const auto& e : es) {
      for (std::int64_t P : {1, 3, 6}) {
        InversionStats stats;
        const SkewMatrix x = invert_series_matrix(e.phi_t, P, &stats);
        CHECK(stats.attempts >= 1);
        CHECK(is_identity_to_precision(mat_mul(e.phi_t, x)));
        CHECK(is_identity_to_precision(mat_mul(x, e.phi_t)));
        for (std::size_t i = 0; i < x.rows(); ++i) {
          for (std::size_t j = 0; j < x.cols(); ++j) {
            const auto fl = x.at(i, j).floor();
            if (fl) CHECK(*fl <= -P);
          }
        }
      }
    }
  }
}

TEST_CASE("precision monotonicity") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    const PerfElement th = PerfElement::theta(f);
    std::vector<AndersonModule> es{
        builtin::maurischat(f, BaseKind::kPerfRational, th),
        builtin::carlitz_tensor(f, BaseKind::kPerfRational, th, 3)};
    for (int it = 0; it < 6; ++it) es.push_back(random_drinfeld(f, 1 + it % 3, false));
    for (const auto& e : es) {
      const SkewMatrix lo = invert_series_matrix(e.phi_t, 3);
      const SkewMatrix hi = invert_series_matrix(e.phi_t, 8);
      CHECK(equal_to_precision(lo, hi));
      for (std::size_t i = 0; i < lo.rows(); ++i) {
        for (std::size_t j = 0; j < lo.cols(); ++j) {
          for (std::int64_t k = -3; k <= 4; ++k) {
            CHECK(lo.at(i, j).coeff(k) == hi.at(i, j).coeff(k));
          }
        }
      }
    }
  }
}

TEST_CASE("inversion errors") {
  const auto f = FiniteField::prime(3);
  CHECK_THROWS_AS(invert_series_matrix(SkewMatrix(f, 2, 3), 3), DimensionError);
  SkewMatrix singular(f, 2, 2);
  singular.at(0, 0) = tau(f, 1);
  singular.at(1, 0) = tau(f, 1);
  singular.at(0, 1) = tau(f, 2);
  singular.at(1, 1) = tau(f, 2);
  CHECK_THROWS_AS(invert_series_matrix(singular, 3), ArithmeticError);
  CHECK_THROWS_AS(invert_series_matrix(SkewMatrix(f, 1, 1), 3), ArithmeticError);
}

TEST_CASE("matrix rendering") {
  const auto f = FiniteField::prime(3);
  const auto e = builtin::maurischat(f, BaseKind::kPerfRational, PerfElement::theta(f));
  CHECK(e.phi_t.render() == "theta + tau^2 | tau^3\n1 + tau | theta + tau^2");
}
