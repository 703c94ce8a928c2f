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


#ifndef TAURES_MANIFEST_HPP
#define TAURES_MANIFEST_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taures/anderson.hpp"
#include "taures/expr.hpp"

namespace taures {

struct SourceLoc {
  int line = 1;
  int column = 1;
};

/// A parsed module description. The text format is line oriented:
///
///   q: 4
///   modulus: z^2 + z + 1
///   base: perf-rational
///   theta: theta
///   dim: 1
///   phi_t:
///     row: theta + tau
///   motive_basis:
///     row: 1
///   comotive_basis:
///     col: 1
///
/// Optional keys: rank, tau_matrix_motive and tau_matrix_comotive (blocks
/// of "row:" lines over R[t]), ext_degree and ext_modulus (a polynomial in
/// alpha). Entries are separated by '|'; '#' starts a comment.
struct Manifest {
  std::uint32_t q = 0;
  /// Declared modulus of F_q over F_p, low to high degree.
  std::optional<std::vector<std::uint32_t>> modulus;
  AndersonModule module;
  std::optional<std::size_t> ext_degree;
  /// Monic, low to high degree.
  std::optional<std::vector<Fq>> ext_modulus;
  /// Where each key appeared.
  std::map<std::string, SourceLoc> locations;
};

/// Throws ParseError at the first syntax or semantic error.
Manifest parse_manifest(std::string_view text);

/// Canonical text; parse_manifest(render_manifest(m)) renders identically.
std::string render_manifest(const Manifest& m);

/// Wraps a module built in code. The modulus is declared when q is not prime.
Manifest manifest_for(const AndersonModule& e);

/// F_q for q = p^m; without a modulus the first monic irreducible one in
/// coefficient order is used.
FieldPtr field_for(std::uint32_t q,
                   const std::optional<std::vector<std::uint32_t>>& modulus);

/// Expression scope for text that refers to the manifest's module.
ExprScope manifest_scope(const Manifest& m, int line = 1, int column = 1);

/// Entries of "a | b | c" with their columns.
std::vector<SkewLaurent> parse_skew_row(std::string_view text, const ExprScope& scope);

}  // namespace taures

#endif  // TAURES_MANIFEST_HPP
