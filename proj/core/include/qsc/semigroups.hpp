// Copyright 2026 The qscocycle Authors
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

#pragma once

// Associated semigroups of the cocycle generated by a BlockGenerator.
//
// For noise vectors c, d:
//   G_{c,d} = E^{c^} F E_{d^} - chi(c,d)   generates Q^{c,d} (normalised slices)
//   H_{c,d} = E^{c^} F E_{d^} + <c,d>      generates P^{c,d} (unnormalised slices)
// so H - G = (|c|^2 + |d|^2)/2 and P_t = e^{t(|c|^2+|d|^2)/2} Q_t.
//
// Everything here is finite dimensional, so every semigroup is norm
// continuous and the strong/weak continuity distinctions of the general
// theory are vacuous.

#include <cstddef>
#include <memory>
#include <vector>

#include "qsc/generator.hpp"

namespace qsc {

struct GeneratorSlice {
  CVector c;
  CVector d;
  CMatrix G;
  CMatrix H;
};

GeneratorSlice g_generator(const BlockGenerator& f, const CVector& c, const CVector& d);

/// Semigroups Q^{c,d}_t and P^{c,d}_t of one generator, with a memo of
/// every exponential computed so far. Cache keys are the exact bit patterns
/// of (c, d, t). Lookups take a shared lock; insertion takes an exclusive
/// one, and when two threads race on a key the first stored value wins
/// (both computed the same deterministic value).
class SemigroupFamily {
 public:
  explicit SemigroupFamily(BlockGenerator source);
  ~SemigroupFamily();
  SemigroupFamily(SemigroupFamily&&) noexcept;
  SemigroupFamily& operator=(SemigroupFamily&&) noexcept;
  SemigroupFamily(const SemigroupFamily&) = delete;
  SemigroupFamily& operator=(const SemigroupFamily&) = delete;

  const BlockGenerator& source() const { return source_; }

  /// exp(t G_{c,d}); throws DomainError for negative t.
  CMatrix q(const CVector& c, const CVector& d, double t) const;
  /// exp(t H_{c,d}); throws DomainError for negative t.
  CMatrix p(const CVector& c, const CVector& d, double t) const;

  std::size_t cache_size() const;

 private:
  struct Cache;
  enum class Kind : unsigned char { kQ, kP };
  CMatrix lookup(Kind kind, const CVector& c, const CVector& d, double t) const;

  BlockGenerator source_;
  std::unique_ptr<Cache> cache_;
};

CMatrix q_semigroup(const SemigroupFamily& family, const CVector& c, const CVector& d, double t);
CMatrix p_semigroup(const SemigroupFamily& family, const CVector& c, const CVector& d, double t);

/// Family of the dual cocycle, generated by F*. Its semigroups satisfy
/// Q~^{c,d}_t = (Q^{d,c}_t)*.
SemigroupFamily dual_family(const BlockGenerator& f);

/// [X^alpha_beta] for alpha, beta in 0..dim_k, each entry an h-operator;
/// index 0 stands for the zero vector / e_0.
class CoordinateMatrix {
 public:
  explicit CoordinateMatrix(std::size_t dim_k, std::size_t dim_h = 0);
  std::size_t dim_k() const { return dim_k_; }
  CMatrix& operator()(std::size_t alpha, std::size_t beta) { return entries_[alpha * (dim_k_ + 1) + beta]; }
  const CMatrix& operator()(std::size_t alpha, std::size_t beta) const {
    return entries_[alpha * (dim_k_ + 1) + beta];
  }

 private:
  std::size_t dim_k_;
  std::vector<CMatrix> entries_;
};

/// G^alpha_beta = G_{d_alpha, d_beta} with d_0 = 0 and d_i the standard basis.
CoordinateMatrix coords_from_f(const BlockGenerator& f);

/// Components F^alpha_beta = E^{e_alpha} F E_{e_beta} recovered from
/// [G^alpha_beta] by the affine transformation
///   F^0_0 = G^0_0,  F^i_0 = G^i_0 - G^0_0 + 1/2,  F^0_j = G^0_j - G^0_0 + 1/2,
///   F^i_j = G^i_j - G^i_0 - G^0_j + G^0_0 - delta_ij.
CoordinateMatrix coords_to_f(const CoordinateMatrix& g);

/// Components F^alpha_beta read directly off the blocks.
CoordinateMatrix components_of(const BlockGenerator& f);

/// Reassembles K = F^0_0, L_i = F^i_0, M_j = F^0_j, C_ij = F^i_j + delta_ij.
BlockGenerator generator_from_components(const CoordinateMatrix& components);

/// Generator of the vacuum-expectation semigroup x -> E^{e(0)} V_t*(x (x) I) V_t E_{e(0)}
/// acting on column-major vec(x):  L(x) = K* x + x K + sum_i L_i* x L_i.
CMatrix heisenberg_markov_generator(const BlockGenerator& f);

/// The vacuum-expectation semigroup applied to x.
CMatrix heisenberg_markov_semigroup(const BlockGenerator& f, const CMatrix& x, double t);

}  // namespace qsc
