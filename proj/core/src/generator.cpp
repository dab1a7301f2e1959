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

#include "qsc/generator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsc/error.hpp"

namespace qsc {
namespace {

using Index = Eigen::Index;

void check_noise_index(std::size_t i, std::size_t dim_k) {
  if (i >= dim_k) {
    throw DimensionError("noise index " + std::to_string(i) + " out of range for dim_k = " +
                         std::to_string(dim_k));
  }
}

void check_shape(const CMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (static_cast<std::size_t>(m.rows()) != rows || static_cast<std::size_t>(m.cols()) != cols) {
    std::ostringstream msg;
    msg << "block " << name << " has shape " << m.rows() << "x" << m.cols() << ", expected " << rows
        << "x" << cols;
    throw DimensionError(msg.str());
  }
}

void check_noise_vector(const CVector& v, std::size_t dim_k, const char* what) {
  if (static_cast<std::size_t>(v.size()) != dim_k) {
    std::ostringstream msg;
    msg << what << ": vector has length " << v.size() << ", expected dim_k = " << dim_k;
    throw DimensionError(msg.str());
  }
}

}  // namespace

BlockGenerator BlockGenerator::assemble(CMatrix k, CMatrix l, CMatrix m, CMatrix c,
                                        std::size_t dim_h, std::size_t dim_k) {
  if (dim_h == 0) throw DimensionError("assemble: dim_h must be at least 1");
  const std::size_t hk = dim_h * dim_k;
  check_shape(k, dim_h, dim_h, "K");
  check_shape(l, hk, dim_h, "L");
  check_shape(m, dim_h, hk, "M");
  check_shape(c, hk, hk, "C");
  for (const auto* block : {&k, &l, &m, &c}) {
    if (!all_finite(*block)) throw NumericalError("assemble: non-finite block entry");
  }
  return BlockGenerator(std::move(k), std::move(l), std::move(m), std::move(c), dim_h, dim_k);
}

BlockGenerator BlockGenerator::zero(std::size_t dim_h, std::size_t dim_k) {
  const auto h = static_cast<Index>(dim_h);
  const auto hk = static_cast<Index>(dim_h * dim_k);
  return assemble(CMatrix::Zero(h, h), CMatrix::Zero(hk, h), CMatrix::Zero(h, hk),
                  CMatrix::Identity(hk, hk), dim_h, dim_k);
}

CMatrix BlockGenerator::L_block(std::size_t i) const {
  check_noise_index(i, dim_k_);
  const auto h = static_cast<Index>(dim_h_);
  return l_.block(static_cast<Index>(i) * h, 0, h, h);
}

CMatrix BlockGenerator::M_block(std::size_t j) const {
  check_noise_index(j, dim_k_);
  const auto h = static_cast<Index>(dim_h_);
  return m_.block(0, static_cast<Index>(j) * h, h, h);
}

CMatrix BlockGenerator::C_block(std::size_t i, std::size_t j) const {
  check_noise_index(i, dim_k_);
  check_noise_index(j, dim_k_);
  const auto h = static_cast<Index>(dim_h_);
  return c_.block(static_cast<Index>(i) * h, static_cast<Index>(j) * h, h, h);
}

CMatrix BlockGenerator::full() const {
  const auto h = static_cast<Index>(dim_h_);
  const auto hk = static_cast<Index>(dim_h_ * dim_k_);
  CMatrix out(h + hk, h + hk);
  out.topLeftCorner(h, h) = k_;
  out.topRightCorner(h, hk) = m_;
  out.bottomLeftCorner(hk, h) = l_;
  out.bottomRightCorner(hk, hk) = c_ - CMatrix::Identity(hk, hk);
  return out;
}

BlockGenerator BlockGenerator::adjoint() const {
  return BlockGenerator(k_.adjoint(), m_.adjoint(), l_.adjoint(), c_.adjoint(), dim_h_, dim_k_);
}

CMatrix delta_projector(std::size_t dim_h, std::size_t dim_k) {
  const auto h = static_cast<Index>(dim_h);
  const auto n = static_cast<Index>(dim_h * (1 + dim_k));
  CMatrix delta = CMatrix::Identity(n, n);
  delta.topLeftCorner(h, h).setZero();
  return delta;
}

CVector hat(const CVector& d) {
  CVector out(d.size() + 1);
  out(0) = 1.0;
  out.tail(d.size()) = d;
  return out;
}

Complex inner(const CVector& c, const CVector& d) {
  if (c.size() != d.size()) throw DimensionError("inner: vector lengths differ");
  return c.dot(d);  // Eigen's dot conjugates the first argument
}

Complex chi(const CVector& c, const CVector& d) {
  if (c.size() != d.size()) throw DimensionError("chi: vector lengths differ");
  return 0.5 * (c.squaredNorm() + d.squaredNorm()) - c.dot(d);
}

BlockGenerator from_hlc(const CMatrix& h, const CMatrix& l, const CMatrix& c, double tolerance) {
  if (h.rows() != h.cols()) throw DimensionError("from_hlc: H is not square");
  const double scale = std::max(1.0, op_norm(h));
  if ((h - h.adjoint()).norm() > tolerance * scale) {
    throw DomainError("from_hlc: H is not Hermitian");
  }
  const auto dim_h = static_cast<std::size_t>(h.rows());
  if (dim_h == 0 || l.rows() % static_cast<Index>(dim_h) != 0) {
    throw DimensionError("block L: row count is not a multiple of dim_h");
  }
  const auto dim_k = static_cast<std::size_t>(l.rows()) / dim_h;
  check_shape(l, dim_h * dim_k, dim_h, "L");
  check_shape(c, dim_h * dim_k, dim_h * dim_k, "C");
  const Complex i_unit(0.0, 1.0);
  CMatrix k = i_unit * h - 0.5 * (l.adjoint() * l);
  CMatrix m = -(l.adjoint() * c);
  return BlockGenerator::assemble(std::move(k), l, std::move(m), c, dim_h, dim_k);
}

CMatrix component(const BlockGenerator& f, const CVector& c, const CVector& d) {
  check_noise_vector(c, f.dim_k(), "component(c)");
  check_noise_vector(d, f.dim_k(), "component(d)");
  CMatrix out = f.K();
  for (std::size_t i = 0; i < f.dim_k(); ++i) {
    const Complex ci = std::conj(c(static_cast<Index>(i)));
    const Complex di = d(static_cast<Index>(i));
    if (ci != Complex(0.0)) out += ci * f.L_block(i);
    if (di != Complex(0.0)) out += di * f.M_block(i);
  }
  for (std::size_t i = 0; i < f.dim_k(); ++i) {
    const Complex ci = std::conj(c(static_cast<Index>(i)));
    if (ci == Complex(0.0)) continue;
    for (std::size_t j = 0; j < f.dim_k(); ++j) {
      const Complex dj = d(static_cast<Index>(j));
      if (dj == Complex(0.0)) continue;
      out += (ci * dj) * f.C_block(i, j);
    }
  }
  if (f.dim_k() > 0) out.diagonal().array() -= c.dot(d);
  return out;
}

CMatrix contractivity_operator(const BlockGenerator& f) {
  const CMatrix full = f.full();
  const CMatrix delta = delta_projector(f.dim_h(), f.dim_k());
  return full + full.adjoint() + full.adjoint() * delta * full;
}

double contractivity_defect(const BlockGenerator& f) {
  return max_herm_eig(contractivity_operator(f));
}

double form_defect(const BlockGenerator& f, const CVector& xi) {
  if (static_cast<std::size_t>(xi.size()) != f.full_dim()) {
    throw DimensionError("form_defect: vector length does not match dim_h * (1 + dim_k)");
  }
  const CVector fxi = f.full() * xi;
  const auto h = static_cast<Index>(f.dim_h());
  const double noise = fxi.tail(fxi.size() - h).squaredNorm();
  return 2.0 * xi.dot(fxi).real() + noise;
}

BlockGenerator yosida_approx(const BlockGenerator& f, int n) {
  if (n <= 0) throw DomainError("yosida_approx: n must be positive");
  const auto h = static_cast<Index>(f.dim_h());
  const CMatrix resolvent_arg = CMatrix::Identity(h, h) - f.K() / static_cast<double>(n);
  Eigen::FullPivLU<CMatrix> lu(resolvent_arg);
  if (!lu.isInvertible() || lu.rcond() < 1e-14) {
    throw NumericalError("yosida_approx: I - K/n is singular (K is not dissipative)");
  }
  const CMatrix j = lu.inverse();
  return BlockGenerator::assemble(j.adjoint() * f.K() * j, f.L() * j, j.adjoint() * f.M(), f.C(),
                                  f.dim_h(), f.dim_k());
}

std::string Classification::summary() const {
  std::ostringstream out;
  out << (contractive ? "contractive" : "NOT contractive") << "; operator defect "
      << operator_defect << "; |C| = " << c_norm;
  if (c_isometric && c_coisometric) {
    out << " (C unitary)";
  } else if (c_isometric) {
    out << " (C isometric)";
  } else if (c_coisometric) {
    out << " (C coisometric)";
  } else if (c_contraction) {
    out << " (C strict contraction)";
  }
  if (equality_case) out << "; equality case, isometric candidate";
  out << "; |M + L*C| = " << m_defect << "; LK defect " << lk_defect;
  return out.str();
}

Classification classify(const BlockGenerator& f, double tolerance) {
  Classification out;
  const auto hk = static_cast<Index>(f.dim_h() * f.dim_k());
  const CMatrix ident = CMatrix::Identity(hk, hk);
  out.c_norm = op_norm(f.C());
  out.c_contraction = out.c_norm <= 1.0 + tolerance;
  out.c_isometric = op_norm(f.C().adjoint() * f.C() - ident) <= tolerance;
  out.c_coisometric = op_norm(f.C() * f.C().adjoint() - ident) <= tolerance;
  out.operator_defect = contractivity_defect(f);
  out.contractive = out.operator_defect <= tolerance;

  const CMatrix lk = f.L().adjoint() * f.L() + f.K() + f.K().adjoint();
  if (lk.size() > 0) {
    out.lk_defect = std::max(std::abs(max_herm_eig(lk)), std::abs(min_herm_eig(lk)));
  }
  out.m_defect = op_norm(f.M() + f.L().adjoint() * f.C());
  out.equality_case = out.c_isometric && out.lk_defect <= tolerance && out.m_defect <= tolerance;
  return out;
}

}  // namespace qsc
