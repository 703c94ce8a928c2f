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


#ifndef TAURES_CHARPOLY_HPP
#define TAURES_CHARPOLY_HPP

#include <cstddef>
#include <vector>

#include "taures/errors.hpp"

namespace taures {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Characteristic polynomial det(x I - A) over a commutative ring, by
/// Berkowitz's division-free algorithm. `Ring` supplies zero(), one(),
/// add, sub and mul. Returns the coefficients [1, c_1, ..., c_n] of
/// x^n + c_1 x^{n-1} + ... + c_n.
template <class Ring>
std::vector<typename Ring::value_type> charpoly(
    const Ring& ring, const DenseMatrix<typename Ring::value_type>& a) {
  using T = typename Ring::value_type;
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionError("charpoly of a non-square matrix");
  }
  std::vector<T> poly{ring.one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C.
    std::vector<T> toeplitz;
    toeplitz.reserve(r + 2);
    toeplitz.push_back(ring.one());
    toeplitz.push_back(ring.sub(ring.zero(), a[r][r]));
    std::vector<T> col;
    col.reserve(r);
    for (std::size_t i = 0; i < r; ++i) col.push_back(a[i][r]);
    for (std::size_t k = 0; k < r; ++k) {
      T dot = ring.zero();
      for (std::size_t i = 0; i < r; ++i) dot = ring.add(dot, ring.mul(a[r][i], col[i]));
      toeplitz.push_back(ring.sub(ring.zero(), dot));
      if (k + 1 == r) break;
      std::vector<T> next(r, ring.zero());
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          next[i] = ring.add(next[i], ring.mul(a[i][j], col[j]));
        }
      }
      col = std::move(next);
    }
    std::vector<T> out(r + 2, ring.zero());
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        out[i] = ring.add(out[i], ring.mul(toeplitz[i - j], poly[j]));
      }
    }
    poly = std::move(out);
  }
  return poly;
}

/// det(A) = (-1)^n c_n.
template <class Ring>
typename Ring::value_type determinant(
    const Ring& ring, const DenseMatrix<typename Ring::value_type>& a) {
  const auto poly = charpoly(ring, a);
  const auto& cn = poly.back();
  return a.size() % 2 == 0 ? cn : ring.sub(ring.zero(), cn);
}

/// adj(A) = (-1)^{n-1} (A^{n-1} + c_1 A^{n-2} + ... + c_{n-1} I), from
/// Cayley-Hamilton; no divisions.
template <class Ring>
DenseMatrix<typename Ring::value_type> adjugate(
    const Ring& ring, const DenseMatrix<typename Ring::value_type>& a) {
  using T = typename Ring::value_type;
  const std::size_t n = a.size();
  const auto poly = charpoly(ring, a);
  DenseMatrix<T> acc(n, std::vector<T>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = ring.one();
  // Horner: acc = A acc + c_k I for k = 1..n-1.
  for (std::size_t k = 1; k < n; ++k) {
    DenseMatrix<T> next(n, std::vector<T>(n, ring.zero()));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          next[i][j] = ring.add(next[i][j], ring.mul(a[i][l], acc[l][j]));
        }
      }
      next[i][i] = ring.add(next[i][i], poly[k]);
    }
    acc = std::move(next);
  }
  if (n % 2 == 0) {
    for (auto& row : acc) {
      for (auto& x : row) x = ring.sub(ring.zero(), x);
    }
  }
  return acc;
}

}  // namespace taures

#endif  // TAURES_CHARPOLY_HPP
