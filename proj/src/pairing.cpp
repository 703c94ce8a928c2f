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


#include "taures/pairing.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "taures/charpoly.hpp"
#include "taures/errors.hpp"

namespace taures {

namespace {

struct TPolyRing {
  using value_type = TPoly;
  FieldPtr field;
  TPoly zero() const { return TPoly(field); }
  TPoly one() const { return TPoly::constant(PerfElement::one(field)); }
  TPoly add(const TPoly& a, const TPoly& b) const { return a + b; }
  TPoly sub(const TPoly& a, const TPoly& b) const { return a - b; }
  TPoly mul(const TPoly& a, const TPoly& b) const { return a * b; }
};

void require_polynomial(const SkewMatrix& x, const char* what) {
  if (!x.is_polynomial()) {
    throw DomainError(std::string(what) + " must lie in R[tau]");
  }
}

DenseMatrix<TPoly> coefficient_matrix(const GramMatrix& g) {
  DenseMatrix<TPoly> a;
  for (const auto& row : g.entries) {
    std::vector<TPoly> r;
    for (const auto& x : row) r.push_back(x.poly);
    a.push_back(std::move(r));
  }
  return a;
}

}  // namespace

std::string GramMatrix::render() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      if (j > 0) out << " | ";
      out << entries[i][j].poly.render();
    }
    out << ']';
    if (i + 1 < entries.size()) out << '\n';
  }
  out << " dt";
  return out.str();
}

ResiduePairing::ResiduePairing(const AndersonModule& e, Limits limits)
    : e_(&e), conv_(find_convergence(e, limits)), tower_(e, limits) {}

std::int64_t ResiduePairing::cutoff(std::int64_t dm, std::int64_t dn) const {
  return conv_.k1 * (2 + dm + dn + conv_.dmax);
}

void ResiduePairing::reserve(std::int64_t dm, std::int64_t dn,
                             std::int64_t extra_terms) {
  tower_.ensure(cutoff(dm, dn) + extra_terms, 1 + dm + dn);
}

Differential ResiduePairing::pair(const SkewMatrix& m, const SkewMatrix& n,
                                  std::int64_t extra_terms) {
  const std::size_t d = e_->dim;
  if (m.rows() != 1 || m.cols() != d) {
    throw DimensionError("m must be a row of length " + std::to_string(d));
  }
  if (n.rows() != d || n.cols() != 1) {
    throw DimensionError("n must be a column of length " + std::to_string(d));
  }
  require_polynomial(m, "m");
  require_polynomial(n, "n");
  const std::int64_t dm = m.deg_tau().value_or(0);
  const std::int64_t dn = n.deg_tau().value_or(0);
  const std::int64_t K = cutoff(dm, dn) + extra_terms;
  reserve(dm, dn, extra_terms);
  const FieldPtr& f = e_->field;
  const SkewMatrix u =
      mat_mul(SkewMatrix::scalar(SkewLaurent::tau_power(f, 1), 1), m);
  TPoly acc(f);
  for (std::int64_t k = 1; k <= K; ++k) {
    const SkewMatrix v = mat_mul(u, tower_.power(k), -dn);
    const SkewMatrix w = mat_mul(v, n, 0);
    const PerfElement c = w.at(0, 0).coeff(0);
    if (!c.is_zero()) acc -= TPoly::monomial(c, static_cast<std::uint64_t>(k - 1));
  }
  return Differential{acc};
}

Differential residue_pair(const AndersonModule& e, const SkewMatrix& m,
                          const SkewMatrix& n, Limits limits) {
  ResiduePairing engine(e, limits);
  return engine.pair(m, n);
}

GramMatrix gram(const AndersonModule& e, ResiduePairing& engine) {
  require_valid(e);
  const std::int64_t dm = max_basis_degree(e.motive_basis);
  const std::int64_t dn = max_basis_degree(e.comotive_basis);
  engine.reserve(dm, dn);
  GramMatrix g;
  g.k_cutoff = engine.cutoff(dm, dn);
  for (const auto& m : e.motive_basis) {
    std::vector<Differential> row;
    for (const auto& n : e.comotive_basis) {
      row.push_back(engine.pair(m, n));
      g.b_level = std::max(g.b_level, row.back().poly.level());
    }
    g.entries.push_back(std::move(row));
  }
  return g;
}

GramMatrix gram(const AndersonModule& e, Limits limits) {
  ResiduePairing engine(e, limits);
  return gram(e, engine);
}

Differential expand_sesquilinear(const GramMatrix& g, const std::vector<TPoly>& a,
                                 const std::vector<TPoly>& b) {
  const std::size_t r = g.size();
  if (a.size() != r || b.size() != r) {
    throw DimensionError("coordinate vectors must have length " + std::to_string(r));
  }
  if (r == 0) throw DimensionError("empty Gram matrix");
  TPoly acc(g.entries[0][0].poly.field());
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i].is_zero()) continue;
    const TPoly ai = a[i].twisted(1);
    for (std::size_t j = 0; j < r; ++j) {
      if (b[j].is_zero()) continue;
      acc += ai * g.entries[i][j].poly * b[j];
    }
  }
  return Differential{acc};
}

bool check_tau_commutation(ResiduePairing& engine, const SkewMatrix& m,
                           const SkewMatrix& n) {
  const FieldPtr& f = m.field();
  const SkewMatrix tau = SkewMatrix::scalar(SkewLaurent::tau_power(f, 1), 1);
  const Differential left = engine.pair(mat_mul(tau, m), n);
  const Differential right = engine.pair(m, mat_mul(n, tau)).twisted();
  return left == right;
}

bool check_tau_commutation(const AndersonModule& e, const SkewMatrix& m,
                           const SkewMatrix& n, Limits limits) {
  ResiduePairing engine(e, limits);
  return check_tau_commutation(engine, m, n);
}

Perfectness check_perfectness(const GramMatrix& g) {
  if (g.size() == 0) throw DimensionError("empty Gram matrix");
  const FieldPtr f = g.entries[0][0].poly.field();
  Perfectness out{false, determinant(TPolyRing{f}, coefficient_matrix(g))};
  out.perfect = !out.det.is_zero() && out.det.is_constant();
  return out;
}

Differential drinfeld_closed_form(const PerfElement& theta,
                                  const std::vector<PerfElement>& g,
                                  std::size_t i, std::size_t j) {
  const std::size_t r = g.size();
  if (r == 0 || g.back().is_zero()) throw DomainError("g_r must be nonzero");
  if (i >= r || j >= r) {
    throw DomainError("indices must lie in [0, " + std::to_string(r) + ")");
  }
  const FieldPtr& f = theta.field();
  const auto m = static_cast<std::int64_t>(1 + i + j) - static_cast<std::int64_t>(r);
  if (m < 0) return Differential{TPoly(f)};
  const PerfElement gr = g.back();
  // h_v = g_{r-v} / g_r with g_0 = theta.
  std::vector<PerfElement> h(r + 1, PerfElement::zero(f));
  for (std::size_t v = 1; v <= r; ++v) {
    h[v] = (v == r ? theta : g[r - v - 1]) / gr;
  }
  const auto jj = static_cast<std::int64_t>(j);
  PerfElement total = PerfElement::zero(f);
  std::vector<std::int64_t> parts;
  // Depth-first enumeration of compositions of m with parts in 1..r.
  std::function<void(std::int64_t)> walk = [&](std::int64_t rest) {
    if (rest == 0) {
      const auto n = static_cast<std::int64_t>(parts.size());
      PerfElement term = PerfElement::one(f);
      std::int64_t suffix = 0;
      for (std::size_t s = parts.size(); s-- > 0;) {
        suffix += parts[s];
        term *= h[static_cast<std::size_t>(parts[s])].frobenius(suffix - jj);
      }
      total += (n % 2 == 0) ? -term : term;
      return;
    }
    for (std::int64_t v = 1; v <= std::min<std::int64_t>(rest, r); ++v) {
      parts.push_back(v);
      walk(rest - v);
      parts.pop_back();
    }
  };
  walk(m);
  return Differential{TPoly::constant(total / gr.frobenius(-jj))};
}

std::uint32_t measure_b(const GramMatrix& g) { return g.b_level; }

std::vector<TPoly> pairing_inverse(const GramMatrix& g,
                                   const std::vector<Differential>& eta) {
  const std::size_t r = g.size();
  if (eta.size() != r) {
    throw DimensionError("right-hand side must have length " + std::to_string(r));
  }
  const Perfectness p = check_perfectness(g);
  if (!p.perfect) throw ValidationError("Gram matrix is not certified perfect");
  const FieldPtr f = g.entries[0][0].poly.field();
  const auto adj = adjugate(TPolyRing{f}, coefficient_matrix(g));
  const PerfElement det_inv = p.det.coeff(0).inverse();
  std::vector<TPoly> b;
  for (std::size_t i = 0; i < r; ++i) {
    TPoly acc(f);
    for (std::size_t j = 0; j < r; ++j) acc += adj[i][j] * eta[j].poly;
    b.push_back(acc.scaled(det_inv));
  }
  return b;
}

}  // namespace taures
