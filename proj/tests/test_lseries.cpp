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

#include "families.hpp"
#include "taures/errors.hpp"
#include "taures/lseries.hpp"

using namespace taures;
using namespace taures::testing;

namespace {

using Elem = ExtField::Elem;

Elem random_elem(const ExtField& k) { return k.from_index(rng()() % k.order()); }

Elem random_nonzero_elem(const ExtField& k) {
  return k.from_index(1 + rng()() % (k.order() - 1));
}

DrinfeldData random_drinfeld_over(const ExtField& k, std::size_t r) {
  DrinfeldData d{random_elem(k), {}};
  for (std::size_t i = 0; i + 1 < r; ++i) d.g.push_back(random_elem(k));
  d.g.push_back(random_nonzero_elem(k));
  return d;
}

// Number of monic irreducible polynomials of degree n over F_q, by Moebius
// inversion of q^n = sum_{d | n} d N_d.
std::uint64_t necklace_count(std::uint64_t q, std::uint64_t n) {
  std::vector<std::uint64_t> count(n + 1);
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < m; ++i) total *= q;
    for (std::uint64_t d = 1; d < m; ++d) {
      if (m % d == 0) total -= d * count[d];
    }
    count[m] = total / m;
  }
  return count[n];
}

FqPoly fq_poly(const FiniteField& f, std::vector<std::int64_t> coeffs) {
  std::vector<FqPoly::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    terms.push_back({static_cast<std::uint64_t>(i), f.from_int(coeffs[i])});
  }
  return FqPoly::from_terms(f, std::move(terms));
}

AndersonModule finite(AndersonModule e) {
  e.base = BaseKind::kFiniteField;
  return e;
}

}  // namespace

TEST_CASE("extension fields: arithmetic") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto f = field_q(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      const ExtField k = ExtField::make(f, n);
      CHECK(k.degree() == n);
      for (int it = 0; it < 60; ++it) {
        const Elem a = random_elem(k);
        const Elem b = random_elem(k);
        const Elem c = random_elem(k);
        CHECK(k.mul(a, b) == k.mul(b, a));
        CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
        CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
        CHECK(k.add(a, k.neg(a)) == k.zero());
        CHECK(k.sub(a, b) == k.add(a, k.neg(b)));
        CHECK(k.frobenius(a, static_cast<std::int64_t>(n)) == a);
        CHECK(k.frobenius(k.frobenius(a, 1), -1) == a);
        CHECK(k.frobenius(k.mul(a, b), 1) == k.mul(k.frobenius(a, 1), k.frobenius(b, 1)));
        CHECK(k.frobenius(k.add(a, b), 1) == k.add(k.frobenius(a, 1), k.frobenius(b, 1)));
        if (!k.is_zero(a)) CHECK(k.mul(a, k.inv(a)) == k.one());
      }
      // F_q is exactly the fixed field of Frobenius.
      std::uint64_t fixed = 0;
      for (std::uint64_t i = 0; i < k.order(); ++i) {
        const Elem a = k.from_index(i);
        const bool is_fixed = k.frobenius(a, 1) == a;
        fixed += is_fixed;
        CHECK(is_fixed == k.as_base(a).has_value());
      }
      CHECK(fixed == q);
    }
  }
  const auto f2 = FiniteField::prime(2);
  CHECK_THROWS_AS(ExtField::make(f2, 0), DomainError);
  CHECK_THROWS_AS(ExtField::make(f2, 2, std::vector<Fq>{Fq{1}, Fq{0}, Fq{1}}),
                  DomainError);
  CHECK_THROWS_AS(ExtField::make(f2, 2, std::vector<Fq>{Fq{1}, Fq{1}}), DomainError);
  CHECK_THROWS_AS(ExtField::make(f2, 2).inv(ExtField::make(f2, 2).zero()),
                  ArithmeticError);
}

TEST_CASE("extension fields: default modulus and irreducibility") {
  const auto f2 = FiniteField::prime(2);
  const ExtField k4 = ExtField::make(f2, 2);
  CHECK(k4.modulus() == std::vector<Fq>{Fq{1}, Fq{1}, Fq{1}});
  CHECK(k4.render(k4.mul(k4.alpha(), k4.alpha())) == "alpha + 1");
  CHECK(ExtField::make(f2, 3).modulus() == std::vector<Fq>{Fq{1}, Fq{1}, Fq{0}, Fq{1}});
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto f = field_q(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= q;
      std::uint64_t count = 0;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Fq> h(n + 1);
        std::uint64_t x = idx;
        for (std::size_t i = 0; i < n; ++i) {
          h[i] = Fq{static_cast<std::uint32_t>(x % q)};
          x /= q;
        }
        h[n] = f->one();
        count += is_irreducible_over(*f, h);
      }
      CHECK(count == necklace_count(q, n));
    }
  }
}

TEST_CASE("Drinfeld tau matrices") {
  const auto f = FiniteField::prime(3);
  const ExtField k = ExtField::make(f, 2);
  const Elem th = k.alpha();
  const auto [m, c] = drinfeld_tau_matrices(k, {th, {k.one()}});
  // Carlitz: [t - theta] on both sides.
  const KPoly expected{k.neg(th), k.one()};
  CHECK(m.entries[0][0] == expected);
  CHECK(c.entries[0][0] == expected);
  CHECK(m.side == Side::kMotive);
  CHECK(c.side == Side::kComotive);

  const Elem g1 = k.add(th, k.one());
  const Elem g2 = k.mul(th, th);
  const auto [m2, c2] = drinfeld_tau_matrices(k, {th, {g1, g2}});
  const Elem u = k.inv(g2);
  CHECK(m2.entries[1][0] == KPoly{k.one()});
  CHECK(m2.entries[0][0].empty());
  CHECK(m2.entries[0][1] == KPoly{k.neg(k.mul(th, u)), u});
  CHECK(m2.entries[1][1] == KPoly{k.neg(k.mul(g1, u))});
  const Elem w = k.frobenius(u, -2);
  CHECK(c2.entries[0][1] == KPoly{k.neg(k.mul(th, w)), w});
  CHECK(c2.entries[1][1] == KPoly{k.neg(k.mul(k.frobenius(g1, -1), w))});
  CHECK_THROWS_AS(drinfeld_tau_matrices(k, {th, {g1, k.zero()}}), DomainError);
}

TEST_CASE("declared tau matrices act as stated") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    const PerfElement th = PerfElement::theta(f);
    std::vector<AndersonModule> es{
        builtin::carlitz(f, BaseKind::kPerfRational, th),
        builtin::maurischat(f, BaseKind::kPerfRational, th),
        builtin::drinfeld(f, BaseKind::kPerfRational, th, {th + PerfElement::one(f), th})};
    for (std::size_t d = 2; d <= 4; ++d) {
      es.push_back(builtin::carlitz_tensor(f, BaseKind::kPerfRational, th, d));
    }
    for (int it = 0; it < 6; ++it) es.push_back(random_drinfeld(f, 1 + it % 3, it % 2 == 1));
    for (const auto& e : es) {
      REQUIRE(e.tau_motive.has_value());
      REQUIRE(e.tau_comotive.has_value());
      CHECK(tau_matrix_consistent(e, *e.tau_motive, Side::kMotive));
      CHECK(tau_matrix_consistent(e, *e.tau_comotive, Side::kComotive));
    }
    // The two sides differ once the coefficients are transcendental.
    CHECK_FALSE(tau_matrix_consistent(es[2], *es[2].tau_comotive, Side::kMotive));
    auto m = builtin::maurischat(f, BaseKind::kPerfRational, th);
    TauMatrix bad = *m.tau_motive;
    bad[2][2] = bad[2][2] + TPoly::constant(PerfElement::one(f));
    CHECK_FALSE(tau_matrix_consistent(m, bad, Side::kMotive));
    bad.pop_back();
    CHECK_FALSE(tau_matrix_consistent(m, bad, Side::kMotive));
  }
}

TEST_CASE("Carlitz Fitting ideals") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    const ExtField k = ExtField::make(f, 1);
    for (std::uint32_t v = 0; v < q; ++v) {
      const Elem th = k.from_base(Fq{v});
      const DrinfeldData d{th, {k.one()}};
      const auto [m, c] = drinfeld_tau_matrices(k, d);
      // T - (t - theta)
      const BivariatePoly expected{
          {poly::sub(*f, FqPoly::constant(Fq{v}), fq_poly(*f, {0, 1})),
           FqPoly::constant(f->one())}};
      CHECK(fitting_ideal(k, m) == expected);
      CHECK(fitting_ideal(k, c) == expected);
      // t x = (theta + 1) x
      CHECK(brute_force_fitting(k, additive_matrix(k, d)) ==
            poly::sub(*f, fq_poly(*f, {0, 1}),
                      FqPoly::constant(f->add(Fq{v}, f->one()))));
    }
  }
  const auto f = FiniteField::prime(2);
  const ExtField k = ExtField::make(f, 2);
  const DrinfeldData d{k.zero(), {k.one()}};
  const auto [m, c] = drinfeld_tau_matrices(k, d);
  const BivariatePoly fm = fitting_ideal(k, m);
  CHECK(fm.render(*f) == "T^2 + t^2");
  CHECK(fitting_ideal(k, c) == fm);
  CHECK(fitting_ideal_via_power(k, m) == fm);
  CHECK(render_tpoly(*f, brute_force_fitting(k, additive_matrix(k, d))) == "t^2 + 1");
  const LSeriesReport rep = lseries_report(k, m, c, additive_matrix(k, d));
  CHECK(rep.render(*f) ==
        "motive: T^2 + t^2\ncomotive: T^2 + t^2\nE(k) fitting: t^2 + 1\nconsistent: yes");
}

TEST_CASE("Fitting ideals of random Drinfeld modules over k") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      const ExtField k = ExtField::make(f, n);
      for (int it = 0; it < 6; ++it) {
        const std::size_t r = 1 + it % 3;
        const DrinfeldData d = random_drinfeld_over(k, r);
        const auto [m, c] = drinfeld_tau_matrices(k, d);
        const BivariatePoly fm = fitting_ideal(k, m);
        const BivariatePoly fc = fitting_ideal(k, c);
        CHECK(fm == fc);
        CHECK(fm.T_degree() == r * n);
        CHECK(fm.by_T.back() == FqPoly::constant(f->one()));
        CHECK(fitting_ideal_via_power(k, m) == fm);
        CHECK(fitting_ideal_via_power(k, c) == fc);
        const FqPoly points = brute_force_fitting(k, additive_matrix(k, d));
        CHECK(points.degree() == n);
        CHECK(equal_up_to_unit(*f, fm.at_T(*f, f->one()), points));
        CHECK(lseries_report(k, m, c, additive_matrix(k, d)).consistent);
      }
    }
  }
}

TEST_CASE("restriction of scalars does not depend on the basis of k") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    for (std::size_t n = 2; n <= 3; ++n) {
      const ExtField k = ExtField::make(f, n);
      for (int it = 0; it < 4; ++it) {
        const DrinfeldData d = random_drinfeld_over(k, 2);
        const auto [m, c] = drinfeld_tau_matrices(k, d);
        // Random invertible change of basis.
        std::vector<Elem> basis;
        while (true) {
          basis.clear();
          for (std::size_t a = 0; a < n; ++a) basis.push_back(random_elem(k));
          try {
            (void)fitting_ideal(k, m, &basis);
            break;
          } catch (const DomainError&) {
          }
        }
        CHECK(fitting_ideal(k, m, &basis) == fitting_ideal(k, m));
        CHECK(fitting_ideal(k, c, &basis) == fitting_ideal(k, c));
      }
      std::vector<Elem> dependent(n, k.one());
      const auto [m, c] = drinfeld_tau_matrices(k, {k.one(), {k.one()}});
      CHECK_THROWS_AS(fitting_ideal(k, m, &dependent), DomainError);
    }
  }
}

TEST_CASE("Fitting ideals of modules over a finite base") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FiniteField::prime(q);
    for (std::uint32_t v = 0; v < q; ++v) {
      const PerfElement th = PerfElement::from_fq(f, Fq{v});
      std::vector<AndersonModule> es{
          builtin::carlitz(f, BaseKind::kFiniteField, th),
          builtin::carlitz_tensor(f, BaseKind::kFiniteField, th, 2),
          builtin::carlitz_tensor(f, BaseKind::kFiniteField, th, 3),
          builtin::maurischat(f, BaseKind::kFiniteField, th),
          builtin::drinfeld(f, BaseKind::kFiniteField, th,
                            {PerfElement::one(f), PerfElement::one(f)})};
      for (const auto& e : es) {
        REQUIRE(validate(e).ok);
        for (std::size_t n = 1; n <= 3; ++n) {
          const ExtField k = ExtField::make(f, n);
          const auto [m, c] = module_tau_matrices(k, e);
          const LSeriesReport rep = lseries_report(k, m, c, additive_matrix(k, e));
          CHECK(rep.consistent);
          CHECK(rep.motive == rep.comotive);
          CHECK(rep.motive.T_degree() == e.rank() * n);
          REQUIRE(rep.points.has_value());
          CHECK(equal_up_to_unit(*f, rep.motive.at_T(*f, f->one()), *rep.points));
        }
      }
    }
  }
}

TEST_CASE("standard Drinfeld modules derive their tau matrices") {
  const auto f = FiniteField::prime(3);
  const ExtField k = ExtField::make(f, 2);
  auto e = builtin::drinfeld(f, BaseKind::kFiniteField, PerfElement::one(f),
                             {PerfElement::from_int(f, 2), PerfElement::one(f)});
  const auto declared = module_tau_matrices(k, e);
  e.tau_motive.reset();
  e.tau_comotive.reset();
  const auto derived = module_tau_matrices(k, e);
  CHECK(derived.first.entries == declared.first.entries);
  CHECK(derived.second.entries == declared.second.entries);
}

TEST_CASE("lseries errors") {
  const auto f = FiniteField::prime(2);
  const ExtField k = ExtField::make(f, 2);
  const auto th = PerfElement::theta(f);
  CHECK_THROWS_AS(module_tau_matrices(k, builtin::carlitz(f, BaseKind::kPerfRational, th)),
                  DomainError);
  CHECK_THROWS_AS(additive_matrix(k, builtin::carlitz(f, BaseKind::kPerfRational, th)),
                  DomainError);
  auto m = builtin::maurischat(f, BaseKind::kFiniteField, PerfElement::zero(f));
  m.tau_comotive.reset();
  CHECK_THROWS_AS(module_tau_matrices(k, m), ValidationError);
  const ExtField big = ExtField::make(f, 4);
  const auto e = builtin::carlitz_tensor(f, BaseKind::kFiniteField, PerfElement::zero(f), 5);
  CHECK_THROWS_AS(brute_force_fitting(big, additive_matrix(big, e)), DomainError);
  const auto [tm, tc] = module_tau_matrices(big, e);
  const LSeriesReport rep = lseries_report(big, tm, tc, additive_matrix(big, e));
  CHECK_FALSE(rep.points.has_value());
  CHECK(rep.consistent);
  CHECK(rep.render(*f).find("E(k) fitting: skipped") != std::string::npos);
}

TEST_CASE("bivariate rendering") {
  const auto f = FiniteField::prime(3);
  BivariatePoly p{{fq_poly(*f, {1, 0, -1}), fq_poly(*f, {0, 1}), fq_poly(*f, {-1, 1}),
                   FqPoly::constant(f->one())}};
  CHECK(p.render(*f) == "T^3 + (t - 1)*T^2 + t*T - t^2 + 1");
  BivariatePoly q{{FqPoly{}, fq_poly(*f, {0, 0, -1}), FqPoly::constant(f->from_int(-1))}};
  CHECK(q.render(*f) == "-T^2 - t^2*T");
  CHECK(BivariatePoly{}.render(*f) == "0");
  CHECK(p.t_degree() == 2);
  CHECK(p.at_T(*f, f->one()) == fq_poly(*f, {1, 2, -1}));
}
