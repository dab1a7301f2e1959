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

#include "qsc/opcore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>

#include "qsc/error.hpp"

namespace qsc {
namespace {

// Higham, "The scaling and squaring method for the matrix exponential
// revisited" (2005): degree thresholds and Padé numerator coefficients.
constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

// Odd/even split U, V of a low-degree approximant built from powers of A.
void pade_low(const CMatrix& a, std::span<const double> b, CMatrix& u, CMatrix& v) {
  const auto n = a.rows();
  const CMatrix ident = CMatrix::Identity(n, n);
  const CMatrix a2 = a * a;
  CMatrix power = ident;
  CMatrix odd = CMatrix::Zero(n, n);
  CMatrix even = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < b.size(); k += 2) {
    even += b[k] * power;
    odd += b[k + 1] * power;
    power = power * a2;
  }
  u = a * odd;
  v = even;
}

void pade13(const CMatrix& a, CMatrix& u, CMatrix& v) {
  const auto n = a.rows();
  const auto& b = kPade13;
  const CMatrix ident = CMatrix::Identity(n, n);
  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a4 * a2;
  CMatrix inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  u = a * (a6 * inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  CMatrix inner_v = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * inner_v + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

}  // namespace

bool all_finite(const CMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    }
  }
  return true;
}

CMatrix mat_exp(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("mat_exp: matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
  if (!all_finite(a)) throw NumericalError("mat_exp: non-finite entry in input");
  const double norm = one_norm(a);
  if (norm > kMatExpNormLimit) {
    throw NumericalError("mat_exp: 1-norm " + std::to_string(norm) +
                         " exceeds the supported limit " + std::to_string(kMatExpNormLimit));
  }
  const auto n = a.rows();
  if (n == 0) return CMatrix(0, 0);

  CMatrix u;
  CMatrix v;
  int squarings = 0;
  if (norm <= kTheta3) {
    pade_low(a, kPade3, u, v);
  } else if (norm <= kTheta5) {
    pade_low(a, kPade5, u, v);
  } else if (norm <= kTheta7) {
    pade_low(a, kPade7, u, v);
  } else if (norm <= kTheta9) {
    pade_low(a, kPade9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    const CMatrix scaled = a / std::ldexp(1.0, squarings);
    pade13(scaled, u, v);
  }
  CMatrix result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) result = result * result;
  if (!all_finite(result)) throw NumericalError("mat_exp: result overflowed");
  return result;
}

CMatrix psd_inv_sqrt(const CMatrix& a, double tolerance) {
  if (a.rows() != a.cols()) throw DimensionError("psd_inv_sqrt: matrix is not square");
  const double scale = std::max(1.0, op_norm(a));
  if ((a - a.adjoint()).norm() > tolerance * scale) {
    throw DomainError("psd_inv_sqrt: matrix is not Hermitian");
  }
  const CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym);
  if (eig.info() != Eigen::Success) throw NumericalError("psd_inv_sqrt: eigensolver failed");
  const Eigen::VectorXd& values = eig.eigenvalues();
  if (values.size() > 0 && values.minCoeff() <= tolerance) {
    throw NumericalError("psd_inv_sqrt: smallest eigenvalue " + std::to_string(values.minCoeff()) +
                         " is not above tolerance (degenerate Gram matrix)");
  }
  const Eigen::VectorXd inv_sqrt = values.cwiseSqrt().cwiseInverse();
  return eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().adjoint();
}

double op_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.cols() == 1) return a.norm();
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double max_herm_eig(const CMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("max_herm_eig: matrix is not square");
  if (a.size() == 0) return 0.0;
  const CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().maxCoeff();
}

double min_herm_eig(const CMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("min_herm_eig: matrix is not square");
  if (a.size() == 0) return 0.0;
  const CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

CMatrix schur_product(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("schur_product: shapes differ");
  }
  return a.cwiseProduct(b);
}

CMatrix schur_product_blocks(const CMatrix& scalars, const CMatrix& blocks) {
  if (scalars.rows() == 0 || scalars.cols() == 0 || blocks.rows() % scalars.rows() != 0 ||
      blocks.cols() % scalars.cols() != 0) {
    throw DimensionError("schur_product_blocks: block matrix is not partitioned by the scalar shape");
  }
  const auto br = blocks.rows() / scalars.rows();
  const auto bc = blocks.cols() / scalars.cols();
  CMatrix out(blocks.rows(), blocks.cols());
  for (Eigen::Index i = 0; i < scalars.rows(); ++i) {
    for (Eigen::Index j = 0; j < scalars.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = scalars(i, j) * blocks.block(i * br, j * bc, br, bc);
    }
  }
  return out;
}

CMatrix kron_identity(const CMatrix& a, Eigen::Index dim) {
  CMatrix out = CMatrix::Zero(a.rows() * dim, a.cols() * dim);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index k = 0; k < dim; ++k) out(i * dim + k, j * dim + k) = a(i, j);
    }
  }
  return out;
}

}  // namespace qsc
