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

#include "qsc/error.hpp"
#include "qsc/generator.hpp"
#include "qsc/random.hpp"
#include "test_support.hpp"

namespace qsc {
namespace {

using testing::rel_diff;
using testing::scalar_hp;

// E^{c^} as an explicit dim_h x full_dim matrix, built from the layout rule.
CMatrix bra_hat(const CVector& c, Eigen::Index dim_h) {
  const CVector ch = hat(c);
  CMatrix out = CMatrix::Zero(dim_h, dim_h * ch.size());
  for (Eigen::Index alpha = 0; alpha < ch.size(); ++alpha) {
    out.block(0, alpha * dim_h, dim_h, dim_h) = std::conj(ch(alpha)) * CMatrix::Identity(dim_h, dim_h);
  }
  return out;
}

BlockGenerator random_generator(Rng& rng, Eigen::Index dim_h, Eigen::Index dim_k) {
  return BlockGenerator::assemble(rng.matrix(dim_h, dim_h), rng.matrix(dim_h * dim_k, dim_h),
                                  rng.matrix(dim_h, dim_h * dim_k),
                                  rng.matrix(dim_h * dim_k, dim_h * dim_k),
                                  static_cast<std::size_t>(dim_h), static_cast<std::size_t>(dim_k));
}

TEST(BlockGenerator, ScalarFullMatrix) {
  const BlockGenerator f = scalar_hp();
  CMatrix expected(2, 2);
  expected << -0.5, -1.0, 1.0, 0.0;
  EXPECT_EQ(f.full(), expected);
  EXPECT_EQ(f.full_dim(), 2u);
}

TEST(BlockGenerator, ZeroGenerator) {
  const BlockGenerator f = BlockGenerator::zero(2, 3);
  EXPECT_TRUE(f.full().isZero());
  EXPECT_EQ(f.C(), CMatrix::Identity(6, 6));
}

TEST(BlockGenerator, ShapeErrorsNameTheBlock) {
  const auto message = [](auto&& fn) {
    try {
      fn();
    } catch (const DimensionError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  const CMatrix k = CMatrix::Zero(2, 2);
  const CMatrix l = CMatrix::Zero(4, 2);
  const CMatrix m = CMatrix::Zero(2, 4);
  const CMatrix c = CMatrix::Identity(4, 4);
  EXPECT_NE(message([&] { BlockGenerator::assemble(CMatrix::Zero(2, 3), l, m, c, 2, 2); })
                .find("block K"),
            std::string::npos);
  EXPECT_NE(message([&] { BlockGenerator::assemble(k, CMatrix::Zero(3, 2), m, c, 2, 2); })
                .find("block L"),
            std::string::npos);
  EXPECT_NE(message([&] { BlockGenerator::assemble(k, l, CMatrix::Zero(2, 3), c, 2, 2); })
                .find("block M"),
            std::string::npos);
  EXPECT_NE(message([&] { BlockGenerator::assemble(k, l, m, CMatrix::Identity(3, 3), 2, 2); })
                .find("block C"),
            std::string::npos);
  EXPECT_THROW(BlockGenerator::assemble(CMatrix(0, 0), CMatrix(0, 0), CMatrix(0, 0),
                                        CMatrix(0, 0), 0, 1),
               DimensionError);
}

TEST(BlockGenerator, BlocksFollowLayout) {
  Rng rng(21);
  const BlockGenerator f = random_generator(rng, 2, 3);
  const CMatrix full = f.full();
  for (std::size_t i = 0; i < 3; ++i) {
    const Eigen::Index r = 2 * static_cast<Eigen::Index>(i + 1);
    EXPECT_EQ(f.L_block(i), full.block(r, 0, 2, 2));
    EXPECT_EQ(f.M_block(i), full.block(0, r, 2, 2));
    for (std::size_t j = 0; j < 3; ++j) {
      const Eigen::Index s = 2 * static_cast<Eigen::Index>(j + 1);
      CMatrix expected = full.block(r, s, 2, 2);
      if (i == j) expected += CMatrix::Identity(2, 2);
      EXPECT_LE(op_norm(f.C_block(i, j) - expected), 1e-15);
    }
  }
  EXPECT_THROW(f.L_block(3), DimensionError);
}

TEST(BlockGenerator, AdjointFullMatrix) {
  Rng rng(22);
  const BlockGenerator f = random_generator(rng, 3, 2);
  EXPECT_LE(op_norm(f.adjoint().full() - f.full().adjoint()), 1e-15);
}

TEST(Chi, Examples) {
  const CVector zero = CVector::Zero(2);
  CVector e1 = CVector::Zero(2);
  e1(0) = 1.0;
  EXPECT_EQ(chi(zero, zero), Complex(0.0));
  EXPECT_EQ(chi(e1, e1), Complex(0.0));
  EXPECT_EQ(chi(e1, zero), Complex(0.5));
  EXPECT_EQ(inner(Complex(0.0, 1.0) * e1, e1), Complex(0.0, -1.0));
  EXPECT_THROW(inner(e1, CVector::Zero(3)), DimensionError);
}

TEST(Component, MatchesExplicitSandwich) {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index dim_h = 1 + trial % 3;
    const Eigen::Index dim_k = 1 + trial % 4;
    const BlockGenerator f = random_generator(rng, dim_h, dim_k);
    const CVector c = rng.vector(dim_k);
    const CVector d = rng.vector(dim_k);
    const CMatrix expected = bra_hat(c, dim_h) * f.full() * bra_hat(d, dim_h).adjoint();
    EXPECT_LE(rel_diff(component(f, c, d), expected), 1e-13);
  }
}

TEST(Component, ScalarModelAtBasisVectors) {
  const BlockGenerator f = scalar_hp();
  const CVector zero = testing::scalar(0.0);
  const CVector one = testing::scalar(1.0);
  EXPECT_NEAR(std::abs(component(f, zero, zero)(0, 0) - Complex(-0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(component(f, one, zero)(0, 0) - Complex(0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(component(f, zero, one)(0, 0) - Complex(-1.5)), 0.0, 1e-15);
}

TEST(FromHlc, Structure) {
  Rng rng(24);
  const CMatrix h = rng.hermitian(2);
  const CMatrix l = rng.matrix(6, 2);
  const CMatrix c = rng.unitary(6);
  const BlockGenerator f = from_hlc(h, l, c);
  EXPECT_LE(op_norm(f.K() - (Complex(0.0, 1.0) * h - 0.5 * l.adjoint() * l)), 1e-14);
  EXPECT_LE(op_norm(f.M() + l.adjoint() * c), 1e-14);
  EXPECT_EQ(f.dim_k(), 3u);
  EXPECT_THROW(from_hlc(rng.matrix(2, 2), l, c), DomainError);
}

TEST(Contractivity, OperatorMatchesDefinition) {
  Rng rng(25);
  const BlockGenerator f = random_generator(rng, 2, 2);
  const CMatrix full = f.full();
  const CMatrix delta = delta_projector(2, 2);
  const CMatrix expected = full + full.adjoint() + full.adjoint() * delta * full;
  EXPECT_LE(rel_diff(contractivity_operator(f), expected), 1e-13);
  for (int trial = 0; trial < 10; ++trial) {
    const CVector xi = rng.vector(6);
    const double form = (xi.adjoint() * expected * xi)(0, 0).real();
    EXPECT_NEAR(form_defect(f, xi), form, 1e-11 * (1.0 + std::abs(form)));
  }
}

TEST(Contractivity, EqualityCaseForUnitaryNoise) {
  Rng rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index dim_h = 1 + trial % 3;
    const Eigen::Index dim_k = 1 + trial % 2;
    const BlockGenerator f = from_hlc(rng.hermitian(dim_h), rng.matrix(dim_h * dim_k, dim_h),
                                      rng.unitary(dim_h * dim_k));
    EXPECT_LE(op_norm(contractivity_operator(f)), 1e-12);
    const Classification cls = classify(f);
    EXPECT_TRUE(cls.equality_case);
    EXPECT_TRUE(cls.contractive);
    EXPECT_TRUE(cls.c_isometric);
  }
}

TEST(Contractivity, ScalarClassification) {
  const Classification cls = classify(scalar_hp());
  EXPECT_TRUE(cls.contractive);
  EXPECT_TRUE(cls.equality_case);
  EXPECT_NEAR(cls.c_norm, 1.0, 1e-15);
  EXPECT_NE(cls.summary().find("contractive"), std::string::npos);
}

TEST(Contractivity, ExpansiveNoiseIsFlagged) {
  const BlockGenerator f = from_hlc(CMatrix::Zero(1, 1), CMatrix::Ones(1, 1),
                                    testing::scalar_matrix(1.5));
  const Classification cls = classify(f);
  EXPECT_FALSE(cls.c_contraction);
  EXPECT_FALSE(cls.contractive);
  EXPECT_GT(contractivity_defect(f), 0.0);
}

TEST(Contractivity, DampedIsStrict) {
  const BlockGenerator f = BlockGenerator::assemble(testing::scalar_matrix(-1.0),
                                                    CMatrix::Zero(1, 1), CMatrix::Zero(1, 1),
                                                    testing::scalar_matrix(0.5), 1, 1);
  const Classification cls = classify(f);
  EXPECT_TRUE(cls.contractive);
  EXPECT_FALSE(cls.equality_case);
  EXPECT_LT(contractivity_defect(f), 0.0);
}

TEST(Yosida, ScalarFirstApproximant) {
  const BlockGenerator y = yosida_approx(scalar_hp(), 1);
  EXPECT_NEAR(std::abs(y.K()(0, 0) - Complex(-2.0 / 9.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(y.L()(0, 0) - Complex(2.0 / 3.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(y.M()(0, 0) - Complex(-2.0 / 3.0)), 0.0, 1e-15);
  EXPECT_EQ(y.C(), scalar_hp().C());
}

TEST(Yosida, PreservesContractivityAndConverges) {
  Rng rng(27);
  const BlockGenerator f = from_hlc(rng.hermitian(3), rng.matrix(6, 3, 0.5), rng.unitary(6));
  std::vector<double> errors;
  for (int n : {16, 32, 64, 128}) {
    const BlockGenerator y = yosida_approx(f, n);
    EXPECT_LE(contractivity_defect(y), 1e-10) << "n = " << n;
    errors.push_back(op_norm(y.full() - f.full()));
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i] / errors[i - 1];
    EXPECT_GT(ratio, 0.4);
    EXPECT_LT(ratio, 0.6);
  }
  EXPECT_THROW(yosida_approx(f, 0), DomainError);
}

}  // namespace
}  // namespace qsc
