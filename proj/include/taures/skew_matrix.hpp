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


#ifndef TAURES_SKEW_MATRIX_HPP
#define TAURES_SKEW_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taures/skew_laurent.hpp"

namespace taures {

/// Dense matrix over R((sigma)). Entries carry their own floors.
class SkewMatrix {
 public:
  SkewMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static SkewMatrix identity(FieldPtr field, std::size_t n);
  /// Diagonal matrix c * I.
  static SkewMatrix scalar(const SkewLaurent& c, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  SkewLaurent& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const SkewLaurent& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  bool is_exact() const;
  /// Max deg_tau over known entries; nullopt for a known-zero matrix.
  std::optional<std::int64_t> deg_tau() const;
  /// Largest entry floor: every entry is known from there on.
  std::optional<std::int64_t> known_from() const;
  /// True when no entry has tau-exponents below 0 (an element of R[tau]).
  bool is_polynomial() const;

  SkewMatrix truncated(std::int64_t floor) const;

  SkewMatrix& operator+=(const SkewMatrix& b);
  SkewMatrix& operator-=(const SkewMatrix& b);
  friend SkewMatrix operator+(SkewMatrix a, const SkewMatrix& b) { return a += b; }
  friend SkewMatrix operator-(SkewMatrix a, const SkewMatrix& b) { return a -= b; }
  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b);

  /// Rows on separate lines, entries separated by " | ".
  std::string render() const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SkewLaurent> e_;
};

/// A*B; with a limit, terms below it are discarded in every entry.
SkewMatrix mat_mul(const SkewMatrix& a, const SkewMatrix& b,
                   std::optional<std::int64_t> limit = std::nullopt);

/// Certified lower bound for min over entries of -deg_tau, counting the
/// unknown tail of a truncated entry; nullopt stands for +infinity.
std::optional<std::int64_t> sigma_order(const SkewMatrix& a);

/// Entrywise equality above the larger floor.
bool equal_to_precision(const SkewMatrix& a, const SkewMatrix& b);

struct InversionStats {
  int attempts = 0;
  std::int64_t working_precision = 0;
};

/// Phi^{-1} by Gauss-Jordan elimination over R((sigma)) with left row
/// operations. Truncated entries of the result are known down to tau^{-P}.
/// Throws DimensionError for non-square input, ArithmeticError for a
/// singular matrix and PrecisionError when 3 precision escalations fail.
SkewMatrix invert_series_matrix(const SkewMatrix& phi, std::int64_t P,
                                InversionStats* stats = nullptr);

}  // namespace taures

#endif  // TAURES_SKEW_MATRIX_HPP
