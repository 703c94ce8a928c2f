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


#ifndef TAURES_EXPR_HPP
#define TAURES_EXPR_HPP

#include <optional>
#include <string>
#include <string_view>

#include "taures/fq_poly.hpp"
#include "taures/perf_element.hpp"
#include "taures/skew_laurent.hpp"
#include "taures/tpoly.hpp"

namespace taures {

/// What the symbols of an expression mean and where the text came from.
///
/// Grammar, with precedence ^ > unary minus > * and / > + and -:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' (integer | '(' integer '/' integer ')'))?
///   atom   := symbol | integer | '(' expr ')' | 'O' '(' expr ')'
/// '*' does not commute. '/' needs a divisor free of tau, sigma and t.
/// Fractional exponents need a power of p as denominator.
struct ExprScope {
  FieldPtr field;
  /// 'z' names the generator of F_q; only legal with a declared modulus.
  bool allow_z = false;
  /// Over a finite base 'theta' stands for this constant.
  std::optional<PerfElement> theta;
  /// Position of the first character, for diagnostics.
  int line = 1;
  int column = 1;
};

/// Element of R((sigma)) in normal form. Symbols: tau, sigma, theta, z and
/// O(...) of a monomial for a truncation.
SkewLaurent parse_skew_expr(std::string_view text, const ExprScope& scope);
/// Same, with 'z' allowed whenever F_q is not prime.
SkewLaurent parse_skew_expr(std::string_view text, const FieldPtr& field);

/// Element of R[t]. Symbols: t, theta, z.
TPoly parse_tpoly_expr(std::string_view text, const ExprScope& scope);

/// Polynomial over F_q in the variable `var`. Symbols: var, z.
FqPoly parse_univariate(std::string_view text, const ExprScope& scope,
                        const std::string& var);

/// theta^(n/d) with d a power of p.
PerfElement theta_root(const FieldPtr& field, std::uint64_t n, std::uint64_t d);

}  // namespace taures

#endif  // TAURES_EXPR_HPP
