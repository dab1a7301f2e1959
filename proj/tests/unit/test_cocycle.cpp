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

#include <chrono>
#include <cmath>
#include <limits>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "qsc/cocycle.hpp"
#include "qsc/error.hpp"
#include "qsc/models.hpp"
#include "qsc/random.hpp"
#include "test_support.hpp"

namespace qsc {
namespace {

using testing::random_step;
using testing::rel_diff;
using testing::scalar;
using testing::scalar_hp;

constexpr double kInf = std::numeric_limits<double>::infinity();

CMatrix h_exp(const BlockGenerator& f, const CVector& c, const CVector& d, double t) {
  const CMatrix h = component(f, c, d) + inner(c, d) * CMatrix::Identity(f.K().rows(), f.K().cols());
  return (t * h).exp();
}

TEST(StepFunction, Validation) {
  const CVector v = scalar(1.0);
  EXPECT_THROW(StepFunction({}, {}, 1.0), DomainError);
  EXPECT_THROW(StepFunction({0.5}, {v}, 1.0), DomainError);
  EXPECT_THROW(StepFunction({0.0, 0.5, 0.5}, {v, v, v}, 1.0), DomainError);
  EXPECT_THROW(StepFunction({0.0, 0.5}, {v, v}, 0.4), DomainError);
  EXPECT_THROW(StepFunction({0.0, 0.5}, {v}, 1.0), DimensionError);
  EXPECT_THROW(StepFunction({0.0, 0.5}, {v, CVector::Zero(2)}, 1.0), DimensionError);
}

TEST(StepFunction, EvaluationIsRightContinuous) {
  const StepFunction f({0.0, 0.5}, {scalar(1.0), scalar(2.0)}, 1.0);
  EXPECT_EQ(f(0.0)(0), Complex(1.0));
  EXPECT_EQ(f(0.4999)(0), Complex(1.0));
  EXPECT_EQ(f(0.5)(0), Complex(2.0));
  EXPECT_EQ(f(1.0)(0), Complex(0.0));
  EXPECT_EQ(f(-0.1)(0), Complex(0.0));
  EXPECT_NEAR(f.squared_norm(), 0.5 + 2.0, 1e-15);
  EXPECT_NEAR(f.squared_norm(0.25, 0.75), 0.25 + 1.0, 1e-15);
}

TEST(StepFunction, ShiftAndRefine) {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const StepFunction f = random_step(rng, 2, 4, 2.0);
    const double r = rng.uniform(0.0, 2.5);
    const StepFunction s = f.shifted(r);
    const StepFunction fine = f.refined({rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0)});
    for (int k = 0; k < 30; ++k) {
      const double x = rng.uniform(0.0, 2.5);
      EXPECT_EQ(s(x), f(x + r));
      EXPECT_EQ(fine(x), f(x));
    }
  }
}

TEST(ExpInner, ConstantPhase) {
  const StepFunction f = StepFunction::constant(scalar(1.0), 1.0);
  const StepFunction g = StepFunction::constant(scalar(Complex(0.0, 1.0)), 1.0);
  const Complex value = exp_inner(f, g, 0.0);
  EXPECT_NEAR(std::abs(value - std::exp(Complex(0.0, 1.0))), 0.0, 1e-15);
  // conjugate-linear in the first slot
  EXPECT_NEAR(std::abs(exp_inner(g, f, 0.0) - std::exp(Complex(0.0, -1.0))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(exp_inner(f, g, 0.5, kInf) - std::exp(Complex(0.0, 0.5))), 0.0, 1e-15);
}

TEST(JointRefinement, CoversInterval) {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const StepFunction f = random_step(rng, 1, 5, 1.5);
    const StepFunction g = random_step(rng, 1, 5, 2.0);
    const auto segs = joint_refinement(f, g, 0.0, 3.0);
    double covered = 0.0;
    for (const Segment& s : segs) {
      EXPECT_NEAR(s.start, covered, 1e-15);
      EXPECT_EQ(s.f_value, f(s.start));
      EXPECT_EQ(s.g_value, g(s.start));
      covered += s.length;
    }
    EXPECT_NEAR(covered, 3.0, 1e-14);
  }
  EXPECT_THROW(joint_refinement(StepFunction::zero(1), StepFunction::zero(2), 0.0, 1.0),
               DimensionError);
}

TEST(SlicedElement, ConstantDataGivesOneSemigroup) {
  const BlockGenerator f = random_contractive(2, 2, 4, RandomMode::kUnitaryC);
  Rng rng(43);
  const CVector c = rng.vector(2);
  const CVector d = rng.vector(2);
  const SlicedOperator s =
      sliced_element(f, StepFunction::constant(c, 2.0), StepFunction::constant(d, 2.0), 1.3);
  EXPECT_LE(rel_diff(s.matrix, h_exp(f, c, d, 1.3)), 1e-12);
  EXPECT_EQ(s.t, 1.3);
}

TEST(SlicedElement, HandWrittenOrderedProduct) {
  const BlockGenerator f = random_contractive(3, 2, 5, RandomMode::kStrictC);
  Rng rng(44);
  const CVector c1 = rng.vector(2);
  const CVector c2 = rng.vector(2);
  const CVector d = rng.vector(2);
  const CVector zero = CVector::Zero(2);
  const StepFunction fs({0.0, 0.4}, {c1, c2}, 1.0);
  const StepFunction gs = StepFunction::constant(d, 0.7);
  const CMatrix expected = h_exp(f, c1, d, 0.4) * h_exp(f, c2, d, 0.3) *
                           h_exp(f, c2, zero, 0.3) * h_exp(f, zero, zero, 0.2);
  EXPECT_LE(rel_diff(sliced_element(f, fs, gs, 1.2).matrix, expected), 1e-12);
}

TEST(SlicedElement, RefinementInvariance) {
  const BlockGenerator f = random_contractive(2, 2, 6, RandomMode::kUnitaryC);
  const SemigroupFamily family(f);
  Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const StepFunction fs = random_step(rng, 2, 3, 1.5);
    const StepFunction gs = random_step(rng, 2, 3, 1.5);
    const std::vector<double> extra{rng.uniform(0.0, 1.5), rng.uniform(0.0, 1.5),
                                    rng.uniform(0.0, 1.5)};
    const CMatrix coarse = sliced_element(family, fs, gs, 1.2).matrix;
    const CMatrix fine = sliced_element(family, fs.refined(extra), gs.refined(extra), 1.2).matrix;
    EXPECT_LE(rel_diff(fine, coarse), 1e-12);
  }
}

TEST(SlicedElement, Errors) {
  const SemigroupFamily family(scalar_hp());
  EXPECT_THROW(sliced_element(family, StepFunction::zero(2), StepFunction::zero(2), 1.0),
               DimensionError);
  EXPECT_THROW(sliced_element(family, StepFunction::zero(1), StepFunction::zero(1), -1.0),
               DomainError);
  EXPECT_THROW(full_matrix_element(family, CVector::Zero(2), StepFunction::zero(1),
                                   scalar(1.0), StepFunction::zero(1), 1.0),
               DimensionError);
}

// Scalar model with constant c, d on [0, T): the element is
// exp(t (K + conj(c) L + M d + conj(c) C d)) exp((T - t) conj(c) d), and past T
// only K acts.
TEST(FullMatrixElement, ScalarClosedForm) {
  const BlockGenerator f = scalar_hp();
  const Complex c(0.3, -0.2);
  const Complex d(-0.1, 0.4);
  const double horizon = 2.0;
  for (double t : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    const double inside = std::min(t, horizon);
    const Complex h = -0.5 + std::conj(c) - d + std::conj(c) * d;
    const Complex expected = std::exp(inside * h) * std::exp((horizon - inside) * std::conj(c) * d) *
                            std::exp(-0.5 * (t - inside));
    const Complex got = full_matrix_element(f, scalar(1.0), StepFunction::constant(scalar(c), horizon),
                                            scalar(1.0), StepFunction::constant(scalar(d), horizon), t);
    EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-14) << "t = " << t;
  }
  EXPECT_NEAR(std::abs(full_matrix_element(f, scalar(1.0), StepFunction::zero(1), scalar(1.0),
                                           StepFunction::zero(1), 1.0) -
                       std::exp(-0.5)),
              0.0, 1e-15);
}

TEST(CocycleDefect, RandomDataIsExact) {
  Rng rng(46);
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 40; ++trial) {
    const BlockGenerator f = random_contractive(1 + trial % 3, 1 + trial % 2,
                                                static_cast<std::uint64_t>(trial),
                                                trial % 2 == 0 ? RandomMode::kUnitaryC
                                                               : RandomMode::kStrictC);
    const SemigroupFamily family(f);
    const StepFunction fs = random_step(rng, f.dim_k(), 4, 3.0);
    const StepFunction gs = random_step(rng, f.dim_k(), 4, 3.0);
    const CocycleDefect defect = cocycle_defect(family, fs, gs, rng.uniform(0.0, 2.0),
                                                rng.uniform(0.0, 2.0));
    EXPECT_LE(defect.relative, 1e-9) << "trial " << trial;
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST(FiniteDifferences, TOperatorConvergesLinearly) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BlockGenerator f = random_contractive(2, 2, 10 + seed, RandomMode::kUnitaryC);
    const SemigroupFamily family(f);
    Rng rng(47 + seed);
    const CVector d = rng.vector(2, 0.5);
    const CMatrix exact = t_operator_exact(f, d);
    const double e1 = op_norm(t_operator_fd(family, d, 1e-2) - exact);
    const double e2 = op_norm(t_operator_fd(family, d, 5e-3) - exact);
    EXPECT_GT(e2 / e1, 0.4);
    EXPECT_LT(e2 / e1, 0.6);
    EXPECT_LT(e2, 0.1);
  }
  const SemigroupFamily family(scalar_hp());
  EXPECT_THROW(t_operator_fd(family, scalar(0.0), 0.0), DomainError);
}

TEST(FiniteDifferences, COperatorConvergesToC) {
  const BlockGenerator f = random_contractive(2, 2, 20, RandomMode::kStrictC);
  const SemigroupFamily family(f);
  const double e1 = op_norm(c_operator_fd(family, 1e-2) - f.C());
  const double e2 = op_norm(c_operator_fd(family, 5e-3) - f.C());
  EXPECT_GT(e2 / e1, 0.4);
  EXPECT_LT(e2 / e1, 0.6);
}

}  // namespace
}  // namespace qsc
