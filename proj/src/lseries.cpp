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


#include "taures/lseries.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "taures/charpoly.hpp"
#include "taures/errors.hpp"

namespace taures {

namespace {

constexpr std::size_t kBruteForceLimit = 16;

using Elem = ExtField::Elem;

struct FqRing {
  using value_type = Fq;
  const FiniteField* f;
  Fq zero() const { return f->zero(); }
  Fq one() const { return f->one(); }
  Fq add(Fq a, Fq b) const { return f->add(a, b); }
  Fq sub(Fq a, Fq b) const { return f->sub(a, b); }
  Fq mul(Fq a, Fq b) const { return f->mul(a, b); }
};

struct FqPolyRing {
  using value_type = FqPoly;
  const FiniteField* f;
  FqPoly zero() const { return FqPoly{}; }
  FqPoly one() const { return FqPoly::constant(f->one()); }
  FqPoly add(const FqPoly& a, const FqPoly& b) const { return poly::add(*f, a, b); }
  FqPoly sub(const FqPoly& a, const FqPoly& b) const { return poly::sub(*f, a, b); }
  FqPoly mul(const FqPoly& a, const FqPoly& b) const { return poly::mul(*f, a, b); }
};

void trim(const ExtField& k, KPoly& a) {
  while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

struct KPolyRing {
  using value_type = KPoly;
  const ExtField* k;
  KPoly zero() const { return {}; }
  KPoly one() const { return {k->one()}; }
  KPoly add(const KPoly& a, const KPoly& b) const {
    KPoly r(std::max(a.size(), b.size()), k->zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k->add(r[i], b[i]);
    trim(*k, r);
    return r;
  }
  KPoly sub(const KPoly& a, const KPoly& b) const {
    KPoly nb;
    for (const auto& c : b) nb.push_back(k->neg(c));
    return add(a, nb);
  }
  KPoly mul(const KPoly& a, const KPoly& b) const {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1, k->zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k->is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        r[i + j] = k->add(r[i + j], k->mul(a[i], b[j]));
      }
    }
    trim(*k, r);
    return r;
  }
};

FqPoly to_fqpoly(const FiniteField& f, const std::vector<Fq>& dense) {
  std::vector<FqPoly::Term> terms;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    terms.push_back({static_cast<std::uint64_t>(i), dense[i]});
  }
  return FqPoly::from_terms(f, std::move(terms));
}

// One signed piece c * var^e of a polynomial rendering.
struct Piece {
  bool negative;
  std::string text;
};

Piece render_piece(const FiniteField& f, Fq c, const std::string& mono) {
  std::string s = f.render(c);
  if (mono.empty()) {
    if (f.is_compound(c)) return {false, "(" + s + ")"};
    if (s[0] == '-') return {true, s.substr(1)};
    return {false, s};
  }
  if (f.is_compound(c)) return {false, "(" + s + ")*" + mono};
  bool negative = false;
  if (s[0] == '-') {
    negative = true;
    s = s.substr(1);
  }
  if (s == "1") return {negative, mono};
  return {negative, s + "*" + mono};
}

std::string power_of(const std::string& var, std::uint64_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

void append(std::string& out, const Piece& p) {
  if (out.empty()) {
    out = (p.negative ? "-" : "") + p.text;
  } else {
    out += (p.negative ? " - " : " + ") + p.text;
  }
}

std::string render_sparse(const FiniteField& f, const FqPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    append(out, render_piece(f, it->coef, power_of(var, it->exp)));
  }
  return out;
}

// Inverse of the matrix whose columns are the coordinates of `basis`.
std::vector<std::vector<Fq>> coordinate_inverse(const ExtField& k,
                                                const std::vector<Elem>& basis) {
  const FiniteField& f = *k.base();
  const std::size_t n = k.degree();
  if (basis.size() != n) throw DimensionError("basis of k must have " + std::to_string(n) + " elements");
  std::vector<std::vector<Fq>> a(n, std::vector<Fq>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = basis[j][i];
    a[i][n + i] = f.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].code == 0) ++p;
    if (p == n) throw DomainError("the given elements are not an F_q-basis of k");
    std::swap(a[p], a[c]);
    const Fq s = f.inv(a[c][c]);
    for (auto& x : a[c]) x = f.mul(x, s);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].code == 0) continue;
      const Fq m = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[c][j]));
    }
  }
  std::vector<std::vector<Fq>> inv(n, std::vector<Fq>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

Elem apply_side(const ExtField& k, const Elem& a, Side side) {
  return k.frobenius(a, side == Side::kMotive ? 1 : -1);
}

KPoly twist(const ExtField& k, const KPoly& a, std::int64_t e) {
  KPoly r;
  for (const auto& c : a) r.push_back(k.frobenius(c, e));
  return r;
}

SkewMatrix scalar_block(const PerfElement& c) {
  return SkewMatrix::scalar(SkewLaurent::scalar(c), 1);
}

}  // namespace

bool is_irreducible_over(const FiniteField& f, const std::vector<Fq>& h) {
  if (h.size() < 2 || h.back() != f.one()) return false;
  const std::size_t n = h.size() - 1;
  const FqPoly hp = to_fqpoly(f, h);
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= f.q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Fq> g(d + 1);
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = Fq{static_cast<std::uint32_t>(x % f.q())};
        x /= f.q();
      }
      g[d] = f.one();
      if (poly::divmod(f, hp, to_fqpoly(f, g)).second.is_zero()) return false;
    }
  }
  return true;
}

ExtField::ExtField(FieldPtr base, std::vector<Fq> h)
    : base_(std::move(base)), n_(h.size() - 1), h_(std::move(h)) {
  for (std::size_t i = 0; i < n_; ++i) order_ *= base_->q();
}

ExtField ExtField::make(FieldPtr base, std::size_t degree,
                        std::optional<std::vector<Fq>> modulus) {
  if (degree == 0) throw DomainError("extension degree must be at least 1");
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    if (order > (1ULL << 32) / base->q()) {
      throw DomainError("extension of degree " + std::to_string(degree) + " is too large");
    }
    order *= base->q();
  }
  if (modulus) {
    if (modulus->size() != degree + 1) {
      throw DomainError("extension modulus must have degree " + std::to_string(degree));
    }
    if (!is_irreducible_over(*base, *modulus)) {
      throw DomainError("extension modulus must be monic and irreducible over F_" +
                        std::to_string(base->q()));
    }
    return ExtField(std::move(base), std::move(*modulus));
  }
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    std::vector<Fq> h(degree + 1);
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < degree; ++i) {
      h[i] = Fq{static_cast<std::uint32_t>(x % base->q())};
      x /= base->q();
    }
    h[degree] = base->one();
    if (is_irreducible_over(*base, h)) return ExtField(std::move(base), std::move(h));
  }
  throw DomainError("no irreducible polynomial found");
}

Elem ExtField::one() const {
  Elem r(n_);
  r[0] = base_->one();
  return r;
}

Elem ExtField::from_base(Fq c) const {
  Elem r(n_);
  r[0] = c;
  return r;
}

Elem ExtField::alpha() const {
  if (n_ == 1) return from_base(base_->neg(h_[0]));
  Elem r(n_);
  r[1] = base_->one();
  return r;
}

Elem ExtField::from_index(std::uint64_t i) const {
  Elem r(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    r[j] = Fq{static_cast<std::uint32_t>(i % base_->q())};
    i /= base_->q();
  }
  return r;
}

bool ExtField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](Fq c) { return c.code == 0; });
}

std::optional<Fq> ExtField::as_base(const Elem& a) const {
  for (std::size_t i = 1; i < n_; ++i) {
    if (a[i].code != 0) return std::nullopt;
  }
  return a[0];
}

Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = base_->add(a[i], b[i]);
  return r;
}

Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = base_->sub(a[i], b[i]);
  return r;
}

Elem ExtField::neg(const Elem& a) const {
  Elem r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = base_->neg(a[i]);
  return r;
}

Elem ExtField::scale(const Elem& a, Fq c) const {
  Elem r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = base_->mul(a[i], c);
  return r;
}

Elem ExtField::mul(const Elem& a, const Elem& b) const {
  const FiniteField& f = *base_;
  std::vector<Fq> prod(2 * n_ - 1);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].code == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
  }
  for (std::size_t d = prod.size(); d-- > n_;) {
    const Fq c = prod[d];
    if (c.code == 0) continue;
    for (std::size_t i = 0; i < n_; ++i) {
      prod[d - n_ + i] = f.sub(prod[d - n_ + i], f.mul(c, h_[i]));
    }
    prod[d] = Fq{};
  }
  prod.resize(n_);
  return prod;
}

Elem ExtField::pow(const Elem& a, std::uint64_t e) const {
  Elem result = one();
  Elem b = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, b);
    e >>= 1U;
    if (e > 0) b = mul(b, b);
  }
  return result;
}

Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw ArithmeticError("inverse of zero in k");
  return pow(a, order_ - 2);
}

Elem ExtField::frobenius(const Elem& a, std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(n_);
  const std::int64_t steps = ((k % n) + n) % n;
  Elem r = a;
  for (std::int64_t i = 0; i < steps; ++i) r = pow(r, base_->q());
  return r;
}

std::string ExtField::render(const Elem& a) const {
  return render_sparse(*base_, to_fqpoly(*base_, a), "alpha");
}

std::string render_tpoly(const FiniteField& f, const FqPoly& a) {
  return render_sparse(f, a, "t");
}

std::string render_fq_poly(const FiniteField& f, const FqPoly& a, const std::string& var) {
  return render_sparse(f, a, var);
}

std::uint64_t BivariatePoly::t_degree() const {
  std::uint64_t d = 0;
  for (const auto& p : by_T) d = std::max(d, p.degree());
  return d;
}

FqPoly BivariatePoly::at_T(const FiniteField& f, Fq c) const {
  FqPoly acc;
  for (std::size_t j = by_T.size(); j-- > 0;) {
    acc = poly::add(f, poly::scale(f, acc, c), by_T[j]);
  }
  return acc;
}

std::string BivariatePoly::render(const FiniteField& f) const {
  std::string out;
  for (std::size_t j = by_T.size(); j-- > 0;) {
    const FqPoly& p = by_T[j];
    if (p.is_zero()) continue;
    const std::string mono = power_of("T", j);
    if (j == 0) {
      const std::string s = render_tpoly(f, p);
      if (s[0] == '-') {
        append(out, {true, s.substr(1)});
      } else {
        append(out, {false, s});
      }
      continue;
    }
    if (p.is_constant()) {
      append(out, render_piece(f, p.constant_term(), mono));
    } else if (p.size() == 1 && !f.is_compound(p.lead())) {
      Piece piece = render_piece(f, p.lead(), power_of("t", p.degree()));
      piece.text += "*" + mono;
      append(out, piece);
    } else {
      append(out, {false, "(" + render_tpoly(f, p) + ")*" + mono});
    }
  }
  return out.empty() ? "0" : out;
}

std::pair<SemilinearMatrix, SemilinearMatrix> drinfeld_tau_matrices(
    const ExtField& k, const DrinfeldData& e) {
  const std::size_t r = e.g.size();
  if (r == 0 || k.is_zero(e.g.back())) throw DomainError("a Drinfeld module needs g_r != 0");
  auto shape = [&](Side side) {
    SemilinearMatrix m;
    m.side = side;
    m.entries.assign(r, std::vector<KPoly>(r));
    for (std::size_t i = 0; i + 1 < r; ++i) m.entries[i + 1][i] = {k.one()};
    return m;
  };
  const auto ri = static_cast<std::int64_t>(r);
  // tau^r = g_r^{-1} (t - theta - g_1 tau - ... - g_{r-1} tau^{r-1}).
  SemilinearMatrix mot = shape(Side::kMotive);
  const Elem u = k.inv(e.g.back());
  mot.entries[0][r - 1] = {k.neg(k.mul(e.theta, u)), u};
  for (std::size_t l = 1; l < r; ++l) {
    mot.entries[l][r - 1] = {k.neg(k.mul(e.g[l - 1], u))};
  }
  // With right scalars: tau^r = (t - theta - sum tau^l g_l^{q^-l}) g_r^{-q^-r}.
  SemilinearMatrix com = shape(Side::kComotive);
  const Elem w = k.frobenius(u, -ri);
  com.entries[0][r - 1] = {k.neg(k.mul(e.theta, w)), w};
  for (std::size_t l = 1; l < r; ++l) {
    const Elem gl = k.frobenius(e.g[l - 1], -static_cast<std::int64_t>(l));
    com.entries[l][r - 1] = {k.neg(k.mul(gl, w))};
  }
  for (auto* m : {&mot, &com}) {
    for (auto& row : m->entries) {
      for (auto& x : row) trim(k, x);
    }
  }
  return {mot, com};
}

SemilinearMatrix tau_matrix_over(const ExtField& k, const TauMatrix& m, Side side) {
  SemilinearMatrix out;
  out.side = side;
  const std::size_t r = m.size();
  for (const auto& row : m) {
    if (row.size() != r) throw DimensionError("tau matrix must be square");
    std::vector<KPoly> krow;
    for (const auto& x : row) {
      KPoly p(x.is_zero() ? 0 : x.degree() + 1, k.zero());
      for (const auto& [e, c] : x.coeffs()) {
        const auto v = c.as_fq();
        if (!v) throw DomainError("tau matrix coefficients must lie in F_q");
        p[e] = k.from_base(*v);
      }
      krow.push_back(std::move(p));
    }
    out.entries.push_back(std::move(krow));
  }
  return out;
}

namespace {

bool standard_drinfeld(const AndersonModule& e) {
  if (e.dim != 1) return false;
  for (std::size_t i = 0; i < e.motive_basis.size(); ++i) {
    const auto t = SkewLaurent::tau_power(e.field, static_cast<std::int64_t>(i));
    if (!(e.motive_basis[i].at(0, 0) == t) || !(e.comotive_basis[i].at(0, 0) == t)) {
      return false;
    }
  }
  const auto deg = e.phi_t.at(0, 0).deg_tau();
  return deg && *deg == static_cast<std::int64_t>(e.motive_basis.size());
}

DrinfeldData drinfeld_data(const ExtField& k, const AndersonModule& e) {
  const SkewLaurent& phi = e.phi_t.at(0, 0);
  auto fq = [&](const PerfElement& c) {
    const auto v = c.as_fq();
    if (!v) throw DomainError("coefficients must lie in F_q over a finite base");
    return k.from_base(*v);
  };
  DrinfeldData d{fq(e.theta), {}};
  for (std::int64_t i = 1; i <= *phi.deg_tau(); ++i) d.g.push_back(fq(phi.coeff(i)));
  return d;
}

}  // namespace

std::pair<SemilinearMatrix, SemilinearMatrix> module_tau_matrices(
    const ExtField& k, const AndersonModule& e) {
  if (e.base != BaseKind::kFiniteField) {
    throw DomainError("Fitting ideals need a finite base field");
  }
  std::optional<std::pair<SemilinearMatrix, SemilinearMatrix>> derived;
  if (standard_drinfeld(e)) derived = drinfeld_tau_matrices(k, drinfeld_data(k, e));
  auto pick = [&](const std::optional<TauMatrix>& declared, Side side) {
    if (declared) return tau_matrix_over(k, *declared, side);
    if (derived) return side == Side::kMotive ? derived->first : derived->second;
    throw ValidationError(std::string("missing ") +
                          (side == Side::kMotive ? "tau_matrix_motive"
                                                 : "tau_matrix_comotive") +
                          " for a module that is not a standard Drinfeld module");
  };
  return {pick(e.tau_motive, Side::kMotive), pick(e.tau_comotive, Side::kComotive)};
}

bool tau_matrix_consistent(const AndersonModule& e, const TauMatrix& m, Side side) {
  const auto& basis = side == Side::kMotive ? e.motive_basis : e.comotive_basis;
  const std::size_t r = basis.size();
  if (m.size() != r) return false;
  for (const auto& row : m) {
    if (row.size() != r) return false;
  }
  const FieldPtr& f = e.field;
  const SkewMatrix tau = SkewMatrix::scalar(SkewLaurent::tau_power(f, 1), 1);
  std::uint64_t top = 0;
  for (const auto& row : m) {
    for (const auto& x : row) top = std::max(top, x.degree());
  }
  std::vector<SkewMatrix> powers{SkewMatrix::identity(f, e.dim)};
  for (std::uint64_t k = 1; k <= top; ++k) powers.push_back(mat_mul(powers.back(), e.phi_t));
  for (std::size_t i = 0; i < r; ++i) {
    const SkewMatrix lhs = side == Side::kMotive ? mat_mul(tau, basis[i])
                                                 : mat_mul(basis[i], tau);
    SkewMatrix rhs(f, lhs.rows(), lhs.cols());
    for (std::size_t l = 0; l < r; ++l) {
      for (const auto& [k, c] : m[l][i].coeffs()) {
        if (side == Side::kMotive) {
          rhs += mat_mul(scalar_block(c), mat_mul(basis[l], powers[k]));
        } else {
          rhs += mat_mul(mat_mul(powers[k], basis[l]), scalar_block(c));
        }
      }
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

BivariatePoly fitting_ideal(const ExtField& k, const SemilinearMatrix& tau,
                            const std::vector<Elem>* basis) {
  const FiniteField& f = *k.base();
  const std::size_t n = k.degree();
  const std::size_t r = tau.size();
  std::vector<Elem> beta;
  if (basis) {
    beta = *basis;
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      Elem x(n);
      x[a] = f.one();
      beta.push_back(std::move(x));
    }
  }
  const auto inv = coordinate_inverse(k, beta);
  auto coords = [&](const Elem& x) {
    std::vector<Fq> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) c[i] = f.add(c[i], f.mul(inv[i][j], x[j]));
    }
    return c;
  };
  const std::size_t N = r * n;
  DenseMatrix<FqPoly> mat(N, std::vector<FqPoly>(N));
  for (std::size_t a = 0; a < n; ++a) {
    const Elem pb = apply_side(k, beta[a], tau.side);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t l = 0; l < r; ++l) {
        const KPoly& x = tau.entries[l][i];
        std::vector<std::vector<Fq>> dense(n, std::vector<Fq>(x.size()));
        for (std::size_t e = 0; e < x.size(); ++e) {
          const auto c = coords(k.mul(pb, x[e]));
          for (std::size_t b = 0; b < n; ++b) dense[b][e] = c[b];
        }
        for (std::size_t b = 0; b < n; ++b) {
          mat[l * n + b][i * n + a] = to_fqpoly(f, dense[b]);
        }
      }
    }
  }
  const auto cp = charpoly(FqPolyRing{&f}, mat);
  BivariatePoly out;
  out.by_T.resize(N + 1);
  for (std::size_t j = 0; j <= N; ++j) out.by_T[N - j] = cp[j];
  return out;
}

BivariatePoly fitting_ideal_via_power(const ExtField& k, const SemilinearMatrix& tau) {
  const FiniteField& f = *k.base();
  const std::size_t n = k.degree();
  const std::size_t r = tau.size();
  const KPolyRing ring{&k};
  const std::int64_t step = tau.side == Side::kMotive ? 1 : -1;
  DenseMatrix<KPoly> pi = tau.entries;
  for (std::size_t s = 1; s < n; ++s) {
    DenseMatrix<KPoly> next(r, std::vector<KPoly>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t l = 0; l < r; ++l) {
          next[i][j] = ring.add(
              next[i][j],
              ring.mul(pi[i][l], twist(k, tau.entries[l][j], step * static_cast<std::int64_t>(s))));
        }
      }
    }
    pi = std::move(next);
  }
  const auto cp = charpoly(ring, pi);
  BivariatePoly out;
  out.by_T.resize(r * n + 1);
  for (std::size_t j = 0; j <= r; ++j) {
    std::vector<Fq> dense;
    for (const auto& c : cp[j]) {
      const auto v = k.as_base(c);
      if (!v) throw DomainError("det(T^n - tau^n) has coefficients outside F_q");
      dense.push_back(*v);
    }
    out.by_T[n * (r - j)] = to_fqpoly(f, dense);
  }
  return out;
}

AdditiveMatrix additive_matrix(const ExtField& /*k*/, const DrinfeldData& e) {
  std::vector<Elem> ops{e.theta};
  for (const auto& g : e.g) ops.push_back(g);
  return {{ops}};
}

AdditiveMatrix additive_matrix(const ExtField& k, const AndersonModule& e) {
  if (e.base != BaseKind::kFiniteField) {
    throw DomainError("E(k) needs a finite base field");
  }
  AdditiveMatrix out(e.dim, std::vector<std::vector<Elem>>(e.dim));
  for (std::size_t i = 0; i < e.dim; ++i) {
    for (std::size_t j = 0; j < e.dim; ++j) {
      const SkewLaurent& x = e.phi_t.at(i, j);
      const auto deg = x.deg_tau();
      if (!deg) continue;
      if (!x.is_exact() || x.ord().value_or(0) < 0) {
        throw DomainError("phi(t) must lie in R[tau]");
      }
      // (a x)^{q^m} = a x^{q^m} for a in F_q.
      for (std::int64_t m = 0; m <= *deg; ++m) {
        const auto v = x.coeff(m).as_fq();
        if (!v) throw DomainError("coefficients must lie in F_q over a finite base");
        out[i][j].push_back(k.from_base(*v));
      }
    }
  }
  return out;
}

FqPoly brute_force_fitting(const ExtField& k, const AdditiveMatrix& phi) {
  const FiniteField& f = *k.base();
  const std::size_t d = phi.size();
  const std::size_t n = k.degree();
  if (d * n > kBruteForceLimit) {
    throw DomainError("E(k) has F_q-dimension " + std::to_string(d * n) +
                      ", above the limit " + std::to_string(kBruteForceLimit));
  }
  const std::size_t N = d * n;
  DenseMatrix<Fq> mat(N, std::vector<Fq>(N));
  for (std::size_t j = 0; j < d; ++j) {
    if (phi[j].size() != d) throw DimensionError("phi(t) must be square");
    for (std::size_t a = 0; a < n; ++a) {
      Elem beta(n);
      beta[a] = f.one();
      for (std::size_t i = 0; i < d; ++i) {
        Elem y = k.zero();
        Elem power = beta;
        for (const auto& c : phi[i][j]) {
          y = k.add(y, k.mul(c, power));
          power = k.frobenius(power, 1);
        }
        for (std::size_t b = 0; b < n; ++b) mat[i * n + b][j * n + a] = y[b];
      }
    }
  }
  const auto cp = charpoly(FqRing{&f}, mat);
  std::vector<Fq> dense(N + 1);
  for (std::size_t j = 0; j <= N; ++j) dense[N - j] = cp[j];
  return to_fqpoly(f, dense);
}

bool equal_up_to_unit(const FiniteField& f, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a == poly::scale(f, b, f.div(a.lead(), b.lead()));
}

std::string LSeriesReport::render(const FiniteField& f) const {
  std::ostringstream out;
  out << "motive: " << motive.render(f) << '\n';
  out << "comotive: " << comotive.render(f) << '\n';
  out << "E(k) fitting: "
      << (points ? render_tpoly(f, *points)
                 : std::string("skipped (dimension above ") +
                       std::to_string(kBruteForceLimit) + ")")
      << '\n';
  out << "consistent: " << (consistent ? "yes" : "no");
  return out.str();
}

LSeriesReport lseries_report(const ExtField& k, const SemilinearMatrix& motive,
                             const SemilinearMatrix& comotive,
                             const AdditiveMatrix& phi) {
  const FiniteField& f = *k.base();
  LSeriesReport rep{fitting_ideal(k, motive), fitting_ideal(k, comotive), std::nullopt,
                    false};
  bool ok = rep.motive == rep.comotive;
  for (const auto* side : {&motive, &comotive}) {
    try {
      ok = ok && fitting_ideal_via_power(k, *side) == rep.motive;
    } catch (const DomainError&) {
      ok = false;
    }
  }
  if (phi.size() * k.degree() <= kBruteForceLimit) {
    rep.points = brute_force_fitting(k, phi);
    ok = ok && equal_up_to_unit(f, rep.motive.at_T(f, f.one()), *rep.points);
  }
  rep.consistent = ok;
  return rep;
}

}  // namespace taures
