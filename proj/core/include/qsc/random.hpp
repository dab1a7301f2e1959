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

// Deterministic random complex data (mt19937_64 with standard normal entries).

#include <cstdint>
#include <random>

#include "qsc/opcore.hpp"

namespace qsc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return normal_(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }
  std::uint64_t next() { return engine_(); }

  CMatrix matrix(Eigen::Index rows, Eigen::Index cols, double scale = 1.0) {
    CMatrix out(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = scale * complex_normal();
    }
    return out;
  }
  CVector vector(Eigen::Index n, double scale = 1.0) { return matrix(n, 1, scale); }

  CMatrix hermitian(Eigen::Index n, double scale = 1.0) {
    const CMatrix a = matrix(n, n, scale);
    return 0.5 * (a + a.adjoint());
  }

  /// Unitary from the QR factorisation of a Gaussian matrix, with the
  /// phases of R's diagonal divided out.
  CMatrix unitary(Eigen::Index n) {
    const CMatrix a = matrix(n, n);
    Eigen::HouseholderQR<CMatrix> qr(a);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
      const double mag = std::abs(r(i, i));
      if (mag > 0.0) q.col(i) *= r(i, i) / mag;
    }
    return q;
  }

  /// Hermitian positive definite with eigenvalues in [floor, floor + O(1)].
  CMatrix positive_definite(Eigen::Index n, double floor = 0.1) {
    const CMatrix g = matrix(n, n, 1.0 / std::sqrt(static_cast<double>(n)));
    CMatrix out = g * g.adjoint();
    out.diagonal().array() += floor;
    return 0.5 * (out + out.adjoint());
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qsc
