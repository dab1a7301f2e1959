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

#include "qsc/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsc/error.hpp"

namespace qsc {
namespace {

using Index = Eigen::Index;

CVector unit(std::size_t dim, std::size_t i) {
  CVector v = CVector::Zero(static_cast<Index>(dim));
  v(static_cast<Index>(i)) = 1.0;
  return v;
}

void check_family_dims(const SemigroupFamily& family, const StepFunction& f, const StepFunction& g) {
  const std::size_t dim_k = family.source().dim_k();
  if (f.dim_k() != dim_k || g.dim_k() != dim_k) {
    std::ostringstream msg;
    msg << "step functions take values in C^" << f.dim_k() << " and C^" << g.dim_k()
        << ", generator has dim_k = " << dim_k;
    throw DimensionError(msg.str());
  }
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<CVector> values,
                           double support_end)
    : dim_k_(0), breakpoints_(std::move(breakpoints)), values_(std::move(values)),
      support_end_(support_end) {
  if (breakpoints_.empty()) throw DomainError("step function: no breakpoints");
  if (breakpoints_.front() != 0.0) throw DomainError("step function: first breakpoint must be 0");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i]) || !(breakpoints_[i] > breakpoints_[i - 1])) {
      throw DomainError("step function: breakpoints must be finite and strictly increasing");
    }
  }
  if (!std::isfinite(support_end_) || support_end_ < breakpoints_.back()) {
    throw DomainError("step function: support_end must be finite and >= the last breakpoint");
  }
  if (values_.size() != breakpoints_.size()) {
    throw DimensionError("step function: need one value per breakpoint");
  }
  dim_k_ = static_cast<std::size_t>(values_.front().size());
  for (const auto& v : values_) {
    if (static_cast<std::size_t>(v.size()) != dim_k_) {
      throw DimensionError("step function: values have different lengths");
    }
    if (!all_finite(v)) throw DomainError("step function: non-finite value");
  }
}

StepFunction StepFunction::zero(std::size_t dim_k) {
  return StepFunction({0.0}, {CVector::Zero(static_cast<Index>(dim_k))}, 0.0);
}

StepFunction StepFunction::constant(const CVector& c, double end) {
  if (!(end >= 0.0)) throw DomainError("step function: negative support end");
  return StepFunction({0.0}, {c}, end);
}

CVector StepFunction::operator()(double t) const {
  if (t < 0.0 || t >= support_end_) return CVector::Zero(static_cast<Index>(dim_k_));
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepFunction StepFunction::shifted(double r) const {
  if (!(r >= 0.0)) throw DomainError("step function: negative shift");
  if (r >= support_end_) return zero(dim_k_);
  std::vector<double> points{0.0};
  std::vector<CVector> vals{(*this)(r)};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i] > r) {
      points.push_back(breakpoints_[i] - r);
      vals.push_back(values_[i]);
    }
  }
  return StepFunction(std::move(points), std::move(vals), support_end_ - r);
}

StepFunction StepFunction::refined(const std::vector<double>& extra) const {
  std::vector<double> points = breakpoints_;
  for (double p : extra) {
    if (p > 0.0 && p < support_end_) points.push_back(p);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<CVector> vals;
  vals.reserve(points.size());
  for (double p : points) vals.push_back((*this)(p));
  return StepFunction(std::move(points), std::move(vals), support_end_);
}

double StepFunction::squared_norm(double a, double b) const {
  const StepFunction& self = *this;
  double total = 0.0;
  for (const auto& seg : joint_refinement(self, self, a, b)) {
    total += seg.length * seg.f_value.squaredNorm();
  }
  return total;
}

std::vector<Segment> joint_refinement(const StepFunction& f, const StepFunction& g, double a,
                                      double b) {
  if (!(a >= 0.0)) throw DomainError("refinement: interval must start at a non-negative time");
  if (!(a <= b)) throw DomainError("refinement: interval end precedes its start");
  if (f.dim_k() != g.dim_k()) throw DimensionError("refinement: step functions differ in dim_k");
  if (std::isinf(b)) b = std::max({a, f.support_end(), g.support_end()});
  std::vector<double> points{a, b};
  for (const StepFunction* s : {&f, &g}) {
    for (double p : s->breakpoints()) {
      if (p > a && p < b) points.push_back(p);
    }
    if (s->support_end() > a && s->support_end() < b) points.push_back(s->support_end());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Segment> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double len = points[i + 1] - points[i];
    if (len <= 0.0) continue;
    out.push_back(Segment{points[i], len, f(points[i]), g(points[i])});
  }
  return out;
}

Complex exp_inner(const StepFunction& f, const StepFunction& g, double a, double b) {
  Complex exponent = 0.0;
  for (const auto& seg : joint_refinement(f, g, a, b)) {
    exponent += seg.length * seg.f_value.dot(seg.g_value);
  }
  return std::exp(exponent);
}

SlicedOperator sliced_element(const SemigroupFamily& family, const StepFunction& f,
                              const StepFunction& g, double t) {
  if (!(t >= 0.0)) throw DomainError("sliced_element: time must be non-negative");
  check_family_dims(family, f, g);
  const auto h = static_cast<Index>(family.source().dim_h());
  CMatrix product = CMatrix::Identity(h, h);
  for (const auto& seg : joint_refinement(f, g, 0.0, t)) {
    product = product * family.p(seg.f_value, seg.g_value, seg.length);
  }
  return SlicedOperator{std::move(product), t};
}

SlicedOperator sliced_element(const BlockGenerator& f_gen, const StepFunction& f,
                              const StepFunction& g, double t) {
  const SemigroupFamily family(f_gen);
  return sliced_element(family, f, g, t);
}

Complex full_matrix_element(const SemigroupFamily& family, const CVector& u, const StepFunction& f,
                            const CVector& v, const StepFunction& g, double t) {
  const auto h = static_cast<Index>(family.source().dim_h());
  if (u.size() != h || v.size() != h) {
    throw DimensionError("full_matrix_element: u and v must have length dim_h");
  }
  const SlicedOperator slice = sliced_element(family, f, g, t);
  return u.dot(slice.matrix * v) * exp_inner(f, g, t);
}

Complex full_matrix_element(const BlockGenerator& f_gen, const CVector& u, const StepFunction& f,
                            const CVector& v, const StepFunction& g, double t) {
  const SemigroupFamily family(f_gen);
  return full_matrix_element(family, u, f, v, g, t);
}

CocycleDefect cocycle_defect(const SemigroupFamily& family, const StepFunction& f,
                             const StepFunction& g, double r, double t) {
  if (!(r >= 0.0) || !(t >= 0.0)) throw DomainError("cocycle_defect: times must be non-negative");
  const CMatrix whole = sliced_element(family, f, g, r + t).matrix;
  const CMatrix head = sliced_element(family, f, g, r).matrix;
  const CMatrix shifted = sliced_element(family, f.shifted(r), g.shifted(r), t).matrix;
  const double tail = std::abs(exp_inner(f, g, r + t));
  CocycleDefect out;
  out.absolute = op_norm(whole - head * shifted) * tail;
  const double scale = op_norm(whole) * tail;
  out.relative = scale > 0.0 ? out.absolute / scale : out.absolute;
  return out;
}

CMatrix t_operator_fd(const SemigroupFamily& family, const CVector& d, double t) {
  if (!(t > 0.0)) throw DomainError("t_operator_fd: t must be positive");
  const BlockGenerator& src = family.source();
  const std::size_t m = src.dim_k();
  const auto h = static_cast<Index>(src.dim_h());
  const CVector zero = CVector::Zero(static_cast<Index>(m));
  const CMatrix base = family.p(zero, d, t);
  CMatrix out(h * static_cast<Index>(m), h);
  for (std::size_t i = 0; i < m; ++i) {
    out.block(static_cast<Index>(i) * h, 0, h, h) = (family.p(unit(m, i), d, t) - base) / t;
  }
  return out;
}

CMatrix c_operator_fd(const SemigroupFamily& family, double t) {
  if (!(t > 0.0)) throw DomainError("c_operator_fd: t must be positive");
  const BlockGenerator& src = family.source();
  const std::size_t m = src.dim_k();
  const auto h = static_cast<Index>(src.dim_h());
  const CVector zero = CVector::Zero(static_cast<Index>(m));
  const CMatrix p00 = family.p(zero, zero, t);
  CMatrix out(h * static_cast<Index>(m), h * static_cast<Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const CMatrix pi0 = family.p(unit(m, i), zero, t);
    for (std::size_t j = 0; j < m; ++j) {
      const CMatrix pij = family.p(unit(m, i), unit(m, j), t);
      const CMatrix p0j = family.p(zero, unit(m, j), t);
      out.block(static_cast<Index>(i) * h, static_cast<Index>(j) * h, h, h) =
          (pij - pi0 - p0j + p00) / t;
    }
  }
  return out;
}

CMatrix t_operator_exact(const BlockGenerator& f, const CVector& d) {
  if (static_cast<std::size_t>(d.size()) != f.dim_k()) {
    throw DimensionError("t_operator_exact: d has the wrong length");
  }
  const auto h = static_cast<Index>(f.dim_h());
  CMatrix out = f.L();
  for (std::size_t i = 0; i < f.dim_k(); ++i) {
    for (std::size_t j = 0; j < f.dim_k(); ++j) {
      out.block(static_cast<Index>(i) * h, 0, h, h) += d(static_cast<Index>(j)) * f.C_block(i, j);
    }
  }
  return out;
}

}  // namespace qsc
