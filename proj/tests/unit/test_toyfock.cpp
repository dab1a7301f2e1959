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

#include <cmath>

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "qsc/error.hpp"
#include "qsc/models.hpp"
#include "qsc/random.hpp"
#include "qsc/toyfock.hpp"
#include "test_support.hpp"

namespace qsc {
namespace {

using testing::random_step;
using testing::scalar;
using testing::scalar_hp;

TEST(StepMatrix, ScalarValues) {
  CMatrix expected(2, 2);
  expected << 0.995, -0.1, 0.1, 1.0;
  EXPECT_LE(op_norm(step_matrix(scalar_hp(), 0.01).matrix - expected), 1e-15);
  EXPECT_THROW(step_matrix(scalar_hp(), 0.0), DomainError);
}

// For M = -L*C and C unitary, G*G - I has blocks tau^2 K*K, tau^{3/2} K*M and
// tau M*M, which bounds the excess of |G|^2 over 1.
TEST(StepMatrix, ExcessNormIsFirstOrder) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BlockGenerator f = random_contractive(2, 2, seed, RandomMode::kUnitaryC);
    const double k = op_norm(f.K());
    const double m = op_norm(f.M());
    for (double tau : {0.1, 0.01, 0.001}) {
      const double bound = tau * tau * k * k + 2.0 * tau * std::sqrt(tau) * k * m + tau * m * m;
      const double norm = op_norm(step_matrix(f, tau).matrix);
      EXPECT_LE(norm * norm, 1.0 + bound + 1e-14);
    }
  }
  // scalar model: |G|^2 = 1 + tau + O(tau^2)
  for (double tau : {1e-2, 1e-3}) {
    const double norm = op_norm(step_matrix(scalar_hp(), tau).matrix);
    EXPECT_NEAR((norm * norm - 1.0) / tau, 1.0, 10.0 * tau);
  }
}

TEST(Lattice, Validation) {
  EXPECT_THROW(ToyLattice(0, 1.0), DomainError);
  EXPECT_THROW(ToyLattice(4, 0.0), DomainError);
  EXPECT_DOUBLE_EQ(ToyLattice(4, 1.0).tau, 0.25);
}

TEST(OracleSlice, ScalarVacuumIsEulerProduct) {
  const StepFunction zero = StepFunction::zero(1);
  for (std::size_t n : {1u, 7u, 64u}) {
    const CMatrix s = oracle_slice(scalar_hp(), zero, zero, ToyLattice(n, 1.0));
    EXPECT_NEAR(s(0, 0).real(), std::pow(1.0 - 0.5 / static_cast<double>(n), n), 1e-14);
  }
}

TEST(OracleSlice, FirstOrderConvergence) {
  const BlockGenerator f = random_contractive(2, 1, 61, RandomMode::kUnitaryC);
  Rng rng(61);
  const CVector c = rng.vector(1, 0.5);
  const CVector d = rng.vector(1, 0.5);
  const StepFunction fs = StepFunction::constant(c, 1.0);
  const StepFunction gs = StepFunction::constant(d, 1.0);
  const CMatrix exact = sliced_element(f, fs, gs, 1.0).matrix;
  double previous = 0.0;
  for (std::size_t n : {128u, 256u, 512u, 1024u}) {
    const double err = op_norm(oracle_slice(f, fs, gs, ToyLattice(n, 1.0)) - exact);
    if (previous > 0.0) {
      EXPECT_GT(err / previous, 0.4);
      EXPECT_LT(err / previous, 0.65);
    }
    previous = err;
  }
}

TEST(OracleSlice, LeftCocycleComposition) {
  const BlockGenerator f = random_contractive(2, 2, 62, RandomMode::kStrictC);
  Rng rng(62);
  const StepFunction fs = random_step(rng, 2, 3, 2.0);
  const StepFunction gs = random_step(rng, 2, 3, 2.0);
  const CMatrix whole = oracle_slice(f, fs, gs, ToyLattice(64, 1.0));
  const CMatrix head = oracle_slice(f, fs, gs, ToyLattice(32, 0.5));
  const CMatrix tail = oracle_slice(f, fs.shifted(0.5), gs.shifted(0.5), ToyLattice(32, 0.5));
  EXPECT_LE(op_norm(whole - head * tail), 1e-13 * op_norm(whole));
}

TEST(OracleMatrixElement, ZeroTimeAndErrors) {
  const StepFunction f = StepFunction::constant(scalar(1.0), 1.0);
  const StepFunction g = StepFunction::constant(scalar(Complex(0.0, 1.0)), 1.0);
  const Complex z = oracle_matrix_element(scalar_hp(), scalar(2.0), f, scalar(0.5), g, 0.0, 8);
  EXPECT_NEAR(std::abs(z - std::exp(Complex(0.0, 1.0))), 0.0, 1e-15);
  EXPECT_THROW(oracle_matrix_element(scalar_hp(), CVector::Zero(2), f, scalar(1.0), g, 1.0, 8),
               DimensionError);
}

TEST(OracleMatrixElement, ApproachesExactElement) {
  const BlockGenerator f = scalar_hp();
  const StepFunction zero = StepFunction::zero(1);
  const Complex z = oracle_matrix_element(f, scalar(1.0), zero, scalar(1.0), zero, 1.0, 4096);
  EXPECT_NEAR(std::abs(z - std::exp(-0.5)), 0.0, 1e-4);
}

// With dim_h = 1 the slot-j factor is I (x) G (x) I, slot 1 most significant.
TEST(OracleStateNorm, MatchesKroneckerOracle) {
  const BlockGenerator f = random_contractive(1, 1, 63, RandomMode::kStrictC);
  Rng rng(63);
  const StepFunction g = random_step(rng, 1, 2, 1.0);
  const Complex v0(0.6, -0.3);
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    const ToyLattice lattice(n, 1.0);
    const CMatrix step = step_matrix(f, lattice.tau).matrix;
    CMatrix v_n = CMatrix::Identity(1, 1);
    CVector state = scalar(v0);
    for (std::size_t j = 0; j < n; ++j) {
      const CMatrix left = CMatrix::Identity(1 << j, 1 << j);
      const CMatrix right = CMatrix::Identity(1 << (n - 1 - j), 1 << (n - 1 - j));
      const CMatrix factor = Eigen::kroneckerProduct(Eigen::kroneckerProduct(left, step).eval(), right);
      v_n = j == 0 ? factor : CMatrix(v_n * factor);
      CVector slot(2);
      slot << 1.0, std::sqrt(lattice.tau) * g(static_cast<double>(j) * lattice.tau)(0);
      state = Eigen::kroneckerProduct(state, slot).eval();
    }
    const StateNorm got = oracle_state_norm(f, scalar(v0), g, 1.0, n);
    EXPECT_NEAR(got.norm, (v_n * state).norm(), 1e-13) << "N = " << n;
    EXPECT_NEAR(got.reference, state.norm(), 1e-13);
    EXPECT_EQ(got.state_dim, std::size_t{1} << n);
  }
}

TEST(OracleStateNorm, BudgetIsEnforced) {
  const StepFunction g = StepFunction::zero(1);
  EXPECT_THROW(oracle_state_norm(scalar_hp(), scalar(1.0), g, 1.0, 10, 512), BudgetError);
  EXPECT_NO_THROW(oracle_state_norm(scalar_hp(), scalar(1.0), g, 1.0, 9, 512));
  EXPECT_THROW(oracle_state_norm(scalar_hp(), scalar(1.0), g, 1.0, 200), BudgetError);
}

}  // namespace
}  // namespace qsc
