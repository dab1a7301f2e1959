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

// Schur-product characterisation probes and the Yosida / Trotter-Kato
// convergence pipeline.
//
// A family {Q^{c,d}} comes from a left contraction cocycle iff for every
// n, every c in T^n, t >= 0, positive invertible A, B and Y : C^n -> h^n
// with |A^{-1/2} Y B^{-1/2}| <= 1,
//
//   |(A . w_t)^{-1/2} (Q_t . Y) (B . w_t)^{-1/2}| <= 1,
//
// where . is the Schur product, w_t = [exp(-t chi(c_i, c_j))] and
// Q_t . Y = [Q^{c_i,c_j}_t y_ij]. No finite set of probes proves the
// inequality; screening can only falsify it.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsc/semigroups.hpp"

namespace qsc {

/// Probe data. Y is stored as an (n dim_h) x n matrix whose (i, j) block is
/// the h-vector y_ij.
class Probe {
 public:
  /// Rescales Y so that the computed |A^{-1/2} Y B^{-1/2}| does not exceed 1.
  /// Throws DimensionError on inconsistent shapes and NumericalError when A
  /// or B is not positive definite.
  Probe(std::vector<CVector> c_tuple, double t, CMatrix a, CMatrix b, CMatrix y);

  std::size_t n() const { return c_tuple_.size(); }
  const std::vector<CVector>& c_tuple() const { return c_tuple_; }
  double t() const { return t_; }
  const CMatrix& A() const { return a_; }
  const CMatrix& B() const { return b_; }
  const CMatrix& Y() const { return y_; }

 private:
  std::vector<CVector> c_tuple_;
  double t_;
  CMatrix a_;
  CMatrix b_;
  CMatrix y_;
};

struct ProbeReport {
  std::size_t probe_id = 0;
  std::size_t n = 0;
  double t = 0.0;
  /// criterion norm - 1 (0 when skipped)
  double defect = 0.0;
  bool pass = false;
  /// Schur product of A or B with w_t numerically singular
  bool skipped = false;
};

/// [exp(-t chi(c_i, c_j))]_{ij}.
CMatrix varpi_matrix(const std::vector<CVector>& c_tuple, double t);

/// Q^c_t . Y.
CMatrix q_schur_y(const SemigroupFamily& family, const Probe& probe);

ProbeReport schur_criterion_check(const SemigroupFamily& family, const Probe& probe,
                                  double tolerance = 1e-9, std::size_t probe_id = 0);

/// n = 1 probes with A = B = 1 and Y a basis vector of h, for
/// t in {0.1, 0.5, 1} and c in {0, e_i, i e_i, -e_i, -i e_i} plus `extra`
/// vectors. All four phases are needed: the linear part of Re G_{c,c}
/// changes sign with c, so a failure may show up along one phase only.
std::vector<Probe> core_probes(std::size_t dim_h, std::size_t dim_k,
                               const std::vector<CVector>& extra = {});

/// Core probes followed by `samples` random probes (n in 1..n_max, c-tuples
/// starting with 0, random positive definite A and B, Y rescaled to the
/// precondition). Deterministic in `seed`; sorted by defect descending,
/// ties by probe_id.
std::vector<ProbeReport> screen_family(const BlockGenerator& f, std::size_t n_max,
                                       std::size_t samples, std::uint64_t seed,
                                       double tolerance = 1e-8);

/// probe_id,n,t,defect,pass,skipped
void write_probe_csv(std::ostream& out, const std::vector<ProbeReport>& reports);

struct ConvergenceRow {
  int n = 0;
  std::size_t pair_id = 0;
  /// sup over the time grid of |Q^{(n) c,d}_t - Q^{c,d}_t|
  double sup_error = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  /// per pair: errors non-increasing along n_list up to 10% slack
  bool monotone = true;
  /// max over pairs of the error at each n (aligned with n_list)
  std::vector<double> max_error;
  std::vector<int> n_list;
};

/// The standard probe pairs (d_alpha, d_beta), alpha, beta in 0..dim_k.
std::vector<std::pair<CVector, CVector>> basis_pairs(std::size_t dim_k);

/// Throws DomainError for a non-contractive F (beyond `tolerance`) or a
/// non-increasing n_list.
ConvergenceReport trotter_kato_pipeline(const BlockGenerator& f, const std::vector<int>& n_list,
                                        const std::vector<std::pair<CVector, CVector>>& probe_pairs,
                                        double horizon, std::size_t grid_points = 20,
                                        double tolerance = tol::kAlgebraic);

/// n,pair_id,sup_error
void write_convergence_csv(std::ostream& out, const ConvergenceReport& report);

}  // namespace qsc
