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

// Step-function test data and exact evaluation of cocycle matrix elements.
//
// Exponential vectors are unnormalised: <e(f), e(g)> = exp int <f, g>.
// For step functions f, g the slice E^{e(f|[0,t))} V_t E_{e(g|[0,t))} is the
// time-ordered product, earliest factor leftmost, of P^{f(s_i), g(s_i)}
// over the joint refinement [s_i, s_{i+1}) of [0, t).

#include <cstddef>
#include <limits>
#include <vector>

#include "qsc/semigroups.hpp"

namespace qsc {

/// Right-continuous, compactly supported, piecewise-constant k-valued
/// function: value v_i on [t_i, t_{i+1}), v_n on [t_n, support_end) and
/// zero from support_end on.
class StepFunction {
 public:
  /// Throws DomainError unless breakpoints start at 0, increase strictly,
  /// and support_end >= the last breakpoint; DimensionError when values
  /// disagree in length or count.
  StepFunction(std::vector<double> breakpoints, std::vector<CVector> values, double support_end);

  /// The zero function on k = C^dim_k.
  static StepFunction zero(std::size_t dim_k);
  /// c on [0, end), zero afterwards.
  static StepFunction constant(const CVector& c, double end);

  std::size_t dim_k() const { return dim_k_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<CVector>& values() const { return values_; }
  double support_end() const { return support_end_; }

  CVector operator()(double t) const;

  /// s -> f(s + r).
  StepFunction shifted(double r) const;

  /// Same function with extra (redundant) breakpoints inserted.
  StepFunction refined(const std::vector<double>& extra) const;

  /// |f|^2 integrated over [a, b).
  double squared_norm(double a = 0.0, double b = std::numeric_limits<double>::infinity()) const;

 private:
  std::size_t dim_k_;
  std::vector<double> breakpoints_;
  std::vector<CVector> values_;
  double support_end_;
};

/// One interval [start, start + length) of a joint refinement.
struct Segment {
  double start;
  double length;
  CVector f_value;
  CVector g_value;
};

/// Joint refinement of f and g on [a, b); zero-length pieces are dropped.
std::vector<Segment> joint_refinement(const StepFunction& f, const StepFunction& g, double a,
                                      double b);

/// exp of int_a^b <f(s), g(s)> ds; b may be +infinity.
Complex exp_inner(const StepFunction& f, const StepFunction& g, double a,
                  double b = std::numeric_limits<double>::infinity());

struct SlicedOperator {
  CMatrix matrix;
  double t = 0.0;
};

SlicedOperator sliced_element(const SemigroupFamily& family, const StepFunction& f,
                              const StepFunction& g, double t);
SlicedOperator sliced_element(const BlockGenerator& f_gen, const StepFunction& f,
                              const StepFunction& g, double t);

/// <u e(f), V_t v e(g)>.
Complex full_matrix_element(const SemigroupFamily& family, const CVector& u, const StepFunction& f,
                            const CVector& v, const StepFunction& g, double t);
Complex full_matrix_element(const BlockGenerator& f_gen, const CVector& u, const StepFunction& f,
                            const CVector& v, const StepFunction& g, double t);

struct CocycleDefect {
  /// |E V_{r+t} E - E V_r sigma_r(V_t) E| as h-operators, times the tail factor
  double absolute = 0.0;
  /// absolute / (|E V_{r+t} E| |tail|)
  double relative = 0.0;
};

/// Compares the slice at r+t with the product of the slice over [0, r) and
/// the slice of the time-shifted data over [0, t).
CocycleDefect cocycle_defect(const SemigroupFamily& family, const StepFunction& f,
                             const StepFunction& g, double r, double t);

/// Blocks t^{-1}(P^{e_i,d}_t - P^{0,d}_t) stacked as an (h (x) k) x h matrix;
/// tends to L + C E_d.
CMatrix t_operator_fd(const SemigroupFamily& family, const CVector& d, double t);

/// Blocks t^{-1}(P^{e_i,e_j}_t - P^{e_i,0}_t - P^{0,e_j}_t + P^{0,0}_t); tends to C.
CMatrix c_operator_fd(const SemigroupFamily& family, double t);

/// L + C E_d, the exact limit of t_operator_fd.
CMatrix t_operator_exact(const BlockGenerator& f, const CVector& d);

}  // namespace qsc
