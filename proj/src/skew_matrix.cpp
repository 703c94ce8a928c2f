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


#include "taures/skew_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "taures/errors.hpp"

namespace taures {

SkewMatrix::SkewMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      e_(rows * cols, SkewLaurent::zero(field)) {}

SkewMatrix SkewMatrix::identity(FieldPtr field, std::size_t n) {
  return scalar(SkewLaurent::one(field), n);
}

SkewMatrix SkewMatrix::scalar(const SkewLaurent& c, std::size_t n) {
  SkewMatrix m(c.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

bool SkewMatrix::is_exact() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const SkewLaurent& x) { return x.is_exact(); });
}

std::optional<std::int64_t> SkewMatrix::deg_tau() const {
  std::optional<std::int64_t> d;
  for (const auto& x : e_) {
    if (auto k = x.deg_tau()) d = d ? std::max(*d, *k) : *k;
  }
  return d;
}

std::optional<std::int64_t> SkewMatrix::known_from() const {
  std::optional<std::int64_t> f;
  for (const auto& x : e_) {
    if (x.floor()) f = f ? std::max(*f, *x.floor()) : *x.floor();
  }
  return f;
}

bool SkewMatrix::is_polynomial() const {
  return std::all_of(e_.begin(), e_.end(), [](const SkewLaurent& x) {
    return x.is_exact() && (x.known_zero() || *x.ord() >= 0);
  });
}

SkewMatrix SkewMatrix::truncated(std::int64_t floor) const {
  SkewMatrix r = *this;
  for (auto& x : r.e_) x = x.truncated(floor);
  return r;
}

SkewMatrix& SkewMatrix::operator+=(const SkewMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) {
    throw DimensionError("matrix sum of incompatible shapes");
  }
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += b.e_[i];
  return *this;
}

SkewMatrix& SkewMatrix::operator-=(const SkewMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) {
    throw DimensionError("matrix difference of incompatible shapes");
  }
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= b.e_[i];
  return *this;
}

bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string SkewMatrix::render() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out << " | ";
      out << at(i, j).render();
    }
    if (i + 1 < rows_) out << '\n';
  }
  return out.str();
}

SkewMatrix mat_mul(const SkewMatrix& a, const SkewMatrix& b,
                   std::optional<std::int64_t> limit) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  SkewMatrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SkewLaurent acc = SkewLaurent::zero(a.field());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc += mul(a.at(i, k), b.at(k, j), limit);
      }
      c.at(i, j) = std::move(acc);
    }
  }
  return c;
}

std::optional<std::int64_t> sigma_order(const SkewMatrix& a) {
  std::optional<std::int64_t> order;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const SkewLaurent& x = a.at(i, j);
      std::optional<std::int64_t> top = x.deg_tau();
      if (x.floor()) top = std::max(top.value_or(*x.floor() - 1), *x.floor() - 1);
      if (!top) continue;
      order = order ? std::min(*order, -*top) : -*top;
    }
  }
  return order;
}

bool equal_to_precision(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!equal_to_precision(a.at(i, j), b.at(i, j))) return false;
    }
  }
  return true;
}

namespace {

struct NeedMorePrecision {};

SkewMatrix eliminate(const SkewMatrix& phi, std::int64_t P, std::int64_t W) {
  const std::size_t d = phi.rows();
  const FieldPtr& F = phi.field();
  const std::int64_t limit = -W;
  std::vector<std::vector<SkewLaurent>> a(
      d, std::vector<SkewLaurent>(2 * d, SkewLaurent::zero(F)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = phi.at(i, j);
    a[i][d + i] = SkewLaurent::one(F);
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::optional<std::size_t> best;
    std::int64_t best_deg = 0;
    bool all_exact = true;
    for (std::size_t r = i; r < d; ++r) {
      all_exact = all_exact && a[r][i].is_exact();
      const auto deg = a[r][i].deg_tau();
      if (!deg) continue;
      if (!best || *deg > best_deg) {
        best = r;
        best_deg = *deg;
      }
    }
    if (!best) {
      if (all_exact) throw ArithmeticError("matrix is not invertible");
      throw NeedMorePrecision{};
    }
    std::swap(a[i], a[*best]);
    const SkewLaurent& piv = a[i][i];
    std::int64_t p_inv = std::max<std::int64_t>(1, W - best_deg + 1);
    if (piv.floor()) p_inv = std::min(p_inv, best_deg - *piv.floor() + 1);
    const SkewLaurent inv = invert_scalar(piv, p_inv);
    for (std::size_t c = 0; c < 2 * d; ++c) {
      if (c == i || a[i][c].is_zero()) continue;
      a[i][c] = mul(inv, a[i][c], limit);
    }
    a[i][i] = SkewLaurent::one(F);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == i || a[r][i].is_zero()) continue;
      const SkewLaurent m = a[r][i];
      for (std::size_t c = 0; c < 2 * d; ++c) {
        if (c == i || a[i][c].is_zero()) continue;
        a[r][c] -= mul(m, a[i][c], limit);
      }
      a[r][i] = SkewLaurent::zero(F);
    }
  }
  SkewMatrix x(F, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const SkewLaurent& e = a[i][d + j];
      if (e.is_exact()) {
        x.at(i, j) = e;
        continue;
      }
      if (*e.floor() > -P) throw NeedMorePrecision{};
      x.at(i, j) = e.truncated(-P);
    }
  }
  return x;
}

}  // namespace

SkewMatrix invert_series_matrix(const SkewMatrix& phi, std::int64_t P,
                                InversionStats* stats) {
  if (phi.rows() != phi.cols()) {
    throw DimensionError("cannot invert a non-square " +
                         std::to_string(phi.rows()) + "x" +
                         std::to_string(phi.cols()) + " matrix");
  }
  if (P < 1) throw DomainError("inversion precision must be at least 1");
  const auto d = static_cast<std::int64_t>(phi.rows());
  const std::int64_t spread = std::max<std::int64_t>(0, phi.deg_tau().value_or(0));
  std::int64_t W = P + d * (spread + 1);
  constexpr int kRetries = 3;
  for (int attempt = 0; attempt <= kRetries; ++attempt, W *= 2) {
    try {
      SkewMatrix x = eliminate(phi, P, W);
      if (stats) *stats = {attempt + 1, W};
      return x;
    } catch (const NeedMorePrecision&) {
    } catch (const PrecisionError&) {
    }
  }
  throw PrecisionError("matrix not invertible to precision " + std::to_string(P) +
                       " after " + std::to_string(kRetries) + " escalations");
}

}  // namespace taures
