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

// Dense complex linear algebra shared by the rest of the library.

#include <complex>

#include <Eigen/Dense>

namespace qsc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace tol {
inline constexpr double kAlgebraic = 1e-10;
inline constexpr double kSpectral = 1e-8;
}  // namespace tol

/// Largest 1-norm accepted by mat_exp; beyond it scaling-and-squaring
/// would overflow long before the answer is meaningful.
inline constexpr double kMatExpNormLimit = 1e4;

/// e^A by scaling and squaring around a diagonal Padé approximant
/// (degrees 3, 5, 7, 9 or 13, picked from the 1-norm of A).
/// Throws DimensionError for non-square A, NumericalError for non-finite
/// input, a 1-norm above kMatExpNormLimit, or a non-finite result.
CMatrix mat_exp(const CMatrix& a);

/// Hermitian X with X A X = I for Hermitian positive-definite A.
/// Throws DomainError when A is not Hermitian within `tolerance` and
/// NumericalError when its smallest eigenvalue is not above `tolerance`.
CMatrix psd_inv_sqrt(const CMatrix& a, double tolerance = 1e-12);

/// Largest singular value.
double op_norm(const CMatrix& a);

/// Largest eigenvalue of the Hermitian part (A + A*)/2.
double max_herm_eig(const CMatrix& a);

/// Smallest eigenvalue of the Hermitian part (A + A*)/2.
double min_herm_eig(const CMatrix& a);

/// Entrywise product of equally shaped matrices.
CMatrix schur_product(const CMatrix& a, const CMatrix& b);

/// Block Schur product: `scalars` is n x m, `blocks` is (n*block_rows) x
/// (m*block_cols); block (i,j) of the result is scalars(i,j) * block (i,j).
CMatrix schur_product_blocks(const CMatrix& scalars, const CMatrix& blocks);

/// A (x) I_dim, the scalar matrix read as an operator on h^n.
CMatrix kron_identity(const CMatrix& a, Eigen::Index dim);

bool all_finite(const CMatrix& a);

}  // namespace qsc
