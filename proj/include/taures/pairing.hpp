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


#ifndef TAURES_PAIRING_HPP
#define TAURES_PAIRING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taures/anderson.hpp"
#include "taures/tpoly.hpp"

namespace taures {

/// Pairing values on the declared bases.
struct GramMatrix {
  std::vector<std::vector<Differential>> entries;
  /// Termination bound K used for every entry.
  std::int64_t k_cutoff = 0;
  /// Max perfection level over all coefficients.
  std::uint32_t b_level = 0;

  std::size_t size() const noexcept { return entries.size(); }
  /// Matrix of t-polynomials followed by " dt".
  std::string render() const;
};

/// Residue-in-tau pairing on one module; keeps Phi(t)^{-k} cached between
/// calls.
class ResiduePairing {
 public:
  explicit ResiduePairing(const AndersonModule& e, Limits limits = {});

  const ConvergenceData& convergence() const noexcept { return conv_; }
  /// K = k1 (2 + dm + dn + Dmax).
  std::int64_t cutoff(std::int64_t dm, std::int64_t dn) const;

  /// -sum_{k=1}^{K + extra} coeff_0(tau m Phi(t)^{-k} n) t^{k-1} dt for a
  /// 1 x d row m and a d x 1 column n over R[tau].
  Differential pair(const SkewMatrix& m, const SkewMatrix& n,
                    std::int64_t extra_terms = 0);

  /// Prepares the cache for degrees up to (dm, dn).
  void reserve(std::int64_t dm, std::int64_t dn, std::int64_t extra_terms = 0);

 private:
  const AndersonModule* e_;
  ConvergenceData conv_;
  InverseTower tower_;
};

Differential residue_pair(const AndersonModule& e, const SkewMatrix& m,
                          const SkewMatrix& n, Limits limits = {});

GramMatrix gram(const AndersonModule& e, Limits limits = {});
GramMatrix gram(const AndersonModule& e, ResiduePairing& engine);

/// sum_{i,j} a_i^{(1)} G_ij b_j, where ^{(1)} raises coefficients to the q-th
/// power and fixes t.
Differential expand_sesquilinear(const GramMatrix& g, const std::vector<TPoly>& a,
                                 const std::vector<TPoly>& b);

/// Compares Res(tau m, n) with the twist of Res(m, n tau).
bool check_tau_commutation(const AndersonModule& e, const SkewMatrix& m,
                           const SkewMatrix& n, Limits limits = {});
bool check_tau_commutation(ResiduePairing& engine, const SkewMatrix& m,
                           const SkewMatrix& n);

struct Perfectness {
  bool perfect = false;
  /// det of the matrix of dt-coefficients.
  TPoly det;
};

Perfectness check_perfectness(const GramMatrix& g);

/// Closed form for Res(tau^i, tau^j) on the Drinfeld module
/// theta + g_1 tau + ... + g_r tau^r (left coefficients), summing over
/// compositions with n >= 0 parts.
Differential drinfeld_closed_form(const PerfElement& theta,
                                  const std::vector<PerfElement>& g,
                                  std::size_t i, std::size_t j);

std::uint32_t measure_b(const GramMatrix& g);

/// The coordinate vector b with G b = eta; throws ValidationError when the
/// Gram matrix is not certified perfect.
std::vector<TPoly> pairing_inverse(const GramMatrix& g,
                                   const std::vector<Differential>& eta);

}  // namespace taures

#endif  // TAURES_PAIRING_HPP
