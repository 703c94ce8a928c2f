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


// Shared random generators for the unit tests.

#ifndef TAURES_TESTS_SUPPORT_HPP
#define TAURES_TESTS_SUPPORT_HPP

#include <random>

#include "taures/finite_field.hpp"
#include "taures/fq_poly.hpp"
#include "taures/perf_element.hpp"
#include "taures/skew_laurent.hpp"

namespace taures::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x7a75);
  return gen;
}

inline Fq random_fq(const FiniteField& f) {
  return Fq{static_cast<std::uint32_t>(rng()() % f.q())};
}

inline Fq random_nonzero_fq(const FiniteField& f) {
  return Fq{1 + static_cast<std::uint32_t>(rng()() % (f.q() - 1))};
}

inline FqPoly random_poly(const FiniteField& f, int max_deg) {
  std::vector<FqPoly::Term> terms;
  const int deg = static_cast<int>(rng()() % (max_deg + 1));
  for (int i = 0; i <= deg; ++i) {
    terms.push_back({static_cast<std::uint64_t>(i), random_fq(f)});
  }
  return FqPoly::from_terms(f, std::move(terms));
}

/// Small random element of the perfection, level at most `max_level`.
inline PerfElement random_perf(const FieldPtr& f, int max_deg = 2,
                               int max_level = 1) {
  FqPoly num = random_poly(*f, max_deg);
  FqPoly den;
  do {
    den = random_poly(*f, max_deg);
  } while (den.is_zero());
  const auto level = static_cast<std::uint32_t>(rng()() % (max_level + 1));
  return PerfElement::from_fraction(f, std::move(num), std::move(den), level);
}

/// Random polynomial in theta^{1/q^level} (denominator 1).
inline PerfElement random_poly_perf(const FieldPtr& f, int max_deg = 2,
                                    int max_level = 1) {
  const auto level = static_cast<std::uint32_t>(rng()() % (max_level + 1));
  return PerfElement::from_fraction(f, random_poly(*f, max_deg),
                                    FqPoly::constant(f->one()), level);
}

inline PerfElement random_nonzero_perf(const FieldPtr& f, int max_deg = 2,
                                       int max_level = 1) {
  PerfElement a = random_perf(f, max_deg, max_level);
  while (a.is_zero()) a = random_perf(f, max_deg, max_level);
  return a;
}

/// Exact random Laurent polynomial with exponents in [lo, hi].
inline SkewLaurent random_skew(const FieldPtr& f, int lo, int hi, int terms = 3,
                               int max_deg = 1, int max_level = 1,
                               bool rational = true) {
  SkewLaurent r = SkewLaurent::zero(f);
  for (int i = 0; i < terms; ++i) {
    const auto k = lo + static_cast<std::int64_t>(rng()() % (hi - lo + 1));
    r += SkewLaurent::monomial(k, rational ? random_perf(f, max_deg, max_level)
                                           : random_poly_perf(f, max_deg, max_level));
  }
  return r;
}

inline SkewLaurent random_nonzero_skew(const FieldPtr& f, int lo, int hi,
                                       int terms = 3) {
  SkewLaurent r = random_skew(f, lo, hi, terms);
  while (r.is_zero()) r = random_skew(f, lo, hi, terms);
  return r;
}

}  // namespace taures::testing

#ifdef DOCTEST_VERSION_STR
namespace doctest {
template <>
struct StringMaker<taures::SkewLaurent> {
  static String convert(const taures::SkewLaurent& v) {
    return v.render().c_str();
  }
};
template <>
struct StringMaker<taures::PerfElement> {
  static String convert(const taures::PerfElement& v) {
    return v.render().c_str();
  }
};
}  // namespace doctest
#endif

#endif  // TAURES_TESTS_SUPPORT_HPP
