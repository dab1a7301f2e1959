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

// Block generators F = [K M; L C-I] on h (+) (h (x) k).
//
// Layout: the noise space k has the standard basis e_1..e_m and the
// augmented space k^ = C (+) k has e_0 first. A vector of h (x) k^ is stored
// noise-major: entry (alpha, a) lives at index alpha * dim_h + a, so the
// h-block for e_0 comes first, followed by the block for e_1 and so on.
// L is the column of blocks L_i = E^{e_i} L, M the row of blocks
// M_j = M E_{e_j}, and C the dim_k x dim_k array of blocks C_ij.

#include <cstddef>
#include <string>

#include "qsc/opcore.hpp"

namespace qsc {

class BlockGenerator {
 public:
  /// Validates the block shapes; the error message names the first
  /// offending block ("block K", "block L", ...).
  static BlockGenerator assemble(CMatrix k, CMatrix l, CMatrix m, CMatrix c, std::size_t dim_h,
                                 std::size_t dim_k);

  /// The zero generator: K, L, M zero and C = I.
  static BlockGenerator zero(std::size_t dim_h, std::size_t dim_k);

  std::size_t dim_h() const { return dim_h_; }
  std::size_t dim_k() const { return dim_k_; }
  /// dim_h * (1 + dim_k)
  std::size_t full_dim() const { return dim_h_ * (1 + dim_k_); }

  const CMatrix& K() const { return k_; }
  const CMatrix& L() const { return l_; }
  const CMatrix& M() const { return m_; }
  const CMatrix& C() const { return c_; }

  /// E^{e_i} L for i in [0, dim_k).
  CMatrix L_block(std::size_t i) const;
  /// M E_{e_j} for j in [0, dim_k).
  CMatrix M_block(std::size_t j) const;
  /// E^{e_i} C E_{e_j}.
  CMatrix C_block(std::size_t i, std::size_t j) const;

  /// The square matrix [K M; L C-I].
  CMatrix full() const;

  /// Generator with full matrix F*: blocks K*, M*, L*, C*.
  BlockGenerator adjoint() const;

 private:
  BlockGenerator(CMatrix k, CMatrix l, CMatrix m, CMatrix c, std::size_t dim_h, std::size_t dim_k)
      : dim_h_(dim_h), dim_k_(dim_k), k_(std::move(k)), l_(std::move(l)), m_(std::move(m)),
        c_(std::move(c)) {}

  std::size_t dim_h_;
  std::size_t dim_k_;
  CMatrix k_;
  CMatrix l_;
  CMatrix m_;
  CMatrix c_;
};

/// Orthogonal projection of h (+) (h (x) k) onto its h (x) k summand.
CMatrix delta_projector(std::size_t dim_h, std::size_t dim_k);

/// d^ = (1, d).
CVector hat(const CVector& d);

/// <c, d>, conjugate-linear in c.
Complex inner(const CVector& c, const CVector& d);

/// chi(c, d) = (|c|^2 + |d|^2)/2 - <c, d>.
Complex chi(const CVector& c, const CVector& d);

/// K = iH - L*L/2, M = -L*C. Throws DomainError when H is not Hermitian
/// within `tolerance`.
BlockGenerator from_hlc(const CMatrix& h, const CMatrix& l, const CMatrix& c,
                        double tolerance = tol::kAlgebraic);

/// E^{c^} F E_{d^} = K + E^c L + M E_d + E^c C E_d - <c, d>.
CMatrix component(const BlockGenerator& f, const CVector& c, const CVector& d);

/// F + F* + F* Delta F.
CMatrix contractivity_operator(const BlockGenerator& f);

/// Largest eigenvalue of F + F* + F* Delta F; non-positive exactly when F
/// generates a contraction cocycle.
double contractivity_defect(const BlockGenerator& f);

/// 2 Re<xi, F xi> + |Delta F xi|^2.
double form_defect(const BlockGenerator& f, const CVector& xi);

/// F^(n) = I^(n)* F I^(n) with I^(n) = diag[J, I] and J = (I - K/n)^{-1}.
/// Throws NumericalError when the resolvent is singular.
BlockGenerator yosida_approx(const BlockGenerator& f, int n);

struct Classification {
  double c_norm = 0.0;
  bool c_contraction = false;
  bool c_isometric = false;
  bool c_coisometric = false;
  /// max eigenvalue of F + F* + F* Delta F
  double operator_defect = 0.0;
  bool contractive = false;
  /// max over unit u of | |Lu|^2 + 2 Re<u, Ku> |
  double lk_defect = 0.0;
  /// |M + L*C|
  double m_defect = 0.0;
  /// C isometric, lk_defect and m_defect below tolerance: F + F* + F* Delta F = 0.
  bool equality_case = false;

  std::string summary() const;
};

Classification classify(const BlockGenerator& f, double tolerance = tol::kAlgebraic);

}  // namespace qsc
