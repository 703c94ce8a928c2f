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

#include "taures/finite_field.hpp"

#include <sstream>

#include "taures/errors.hpp"

namespace taures {

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of a by b over F_p (b nonzero, trimmed).
Digits poly_mod_p(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead = b.back();
  std::uint32_t lead_inv = 1;
  for (std::uint32_t x = 1; x < p; ++x) {
    if ((static_cast<std::uint64_t>(lead) * x) % p == 1) {
      lead_inv = x;
      break;
    }
  }
  while (a.size() >= b.size()) {
    const std::uint64_t factor =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly,
                          std::uint32_t p) {
  Digits f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    // Enumerate monic divisors of degree d.
    Digits g(d + 1, 0);
    g[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (poly_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr FiniteField::make(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) {
    throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  }
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw DomainError("field modulus must be monic of degree >= 1");
  }
  if (!is_irreducible_mod_p(modulus, p)) {
    throw DomainError("field modulus is reducible over F_" + std::to_string(p));
  }
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw DomainError("field order exceeds " + std::to_string(kMaxOrder));
    }
  }
  return FieldPtr(new FiniteField(p, std::move(modulus)));
}

FieldPtr FiniteField::prime(std::uint32_t p) { return make(p, {0, 1}); }

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), m_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(1),
      modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  std::vector<Digits> dig(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Digits d(m_);
    std::uint32_t x = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    dig[a] = std::move(d);
  }
  auto encode = [&](const Digits& d) {
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i];
    return code;
  };
  for (std::uint32_t a = 0; a < q_; ++a) {
    Digits n(m_);
    for (std::uint32_t i = 0; i < m_; ++i) n[i] = (p_ - dig[a][i]) % p_;
    neg_[a] = static_cast<std::uint16_t>(encode(n));
    for (std::uint32_t b = 0; b < q_; ++b) {
      Digits s(m_);
      for (std::uint32_t i = 0; i < m_; ++i) s[i] = (dig[a][i] + dig[b][i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint16_t>(encode(s));
      Digits prod(2 * m_, 0);
      for (std::uint32_t i = 0; i < m_; ++i) {
        for (std::uint32_t j = 0; j < m_; ++j) {
          prod[i + j] = static_cast<std::uint32_t>(
              (prod[i + j] + static_cast<std::uint64_t>(dig[a][i]) * dig[b][j]) %
              p_);
        }
      }
      Digits r = poly_mod_p(prod, modulus_, p_);
      r.resize(m_, 0);
      mul_[a * q_ + b] = static_cast<std::uint16_t>(encode(r));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  if (m_ == 1) {
    generator_ = Fq{(p_ - modulus_[0]) % p_};
  } else {
    generator_ = Fq{p_};  // digits (0, 1, 0, ...)
  }
}

Fq FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fq{static_cast<std::uint32_t>(r)};
}

Fq FiniteField::inv(Fq a) const {
  if (a.code == 0) throw ArithmeticError("division by zero in F_q");
  return Fq{inv_[a.code]};
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const noexcept {
  Fq result = one();
  Fq base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<std::uint32_t> FiniteField::digits(Fq a) const {
  Digits d(m_);
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Fq FiniteField::from_digits(std::span<const std::uint32_t> d) const {
  // Reduce an arbitrary-length digit vector modulo the modulus.
  Digits v(d.begin(), d.end());
  for (auto& c : v) c %= p_;
  v = poly_mod_p(std::move(v), modulus_, p_);
  std::uint32_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p_ + v[i];
  return Fq{code};
}

std::int64_t FiniteField::symmetric(std::uint32_t residue, std::uint32_t p) {
  const std::int64_t r = residue % p;
  return (2 * r > static_cast<std::int64_t>(p)) ? r - p : r;
}

std::string FiniteField::render(Fq a) const {
  if (a.code == 0) return "0";
  const Digits d = digits(a);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    std::int64_t c = symmetric(d[i], p_);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 'z';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

bool FiniteField::is_compound(Fq a) const {
  int nonzero = 0;
  for (auto c : digits(a)) nonzero += (c != 0);
  return nonzero > 1;
}

std::string error_prefix(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kArithmetic:
      return "error[arith]";
    case ErrorKind::kDimension:
      return "error[dimension]";
    case ErrorKind::kDomain:
      return "error[domain]";
    case ErrorKind::kParse:
      return "error[parse]";
    case ErrorKind::kValidation:
      return "error[validation]";
    case ErrorKind::kConvergence:
      return "error[convergence]";
    case ErrorKind::kPrecision:
      return "error[precision]";
  }
  return "error";
}

}  // namespace taures
