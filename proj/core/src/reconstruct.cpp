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

#include "qsc/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "qsc/error.hpp"
#include "qsc/random.hpp"

namespace qsc {
namespace {

using Index = Eigen::Index;

constexpr double kGramTolerance = 1e-12;

// |(X_A (x) I_h) Y X_B| with X = A^{-1/2}; shared by the precondition and
// the criterion so the t = 0 criterion reproduces the precondition exactly.
double weighted_norm(const CMatrix& a, const CMatrix& y, const CMatrix& b, Index dim_h) {
  const CMatrix left = kron_identity(psd_inv_sqrt(a, kGramTolerance), dim_h);
  const CMatrix right = psd_inv_sqrt(b, kGramTolerance);
  return op_norm(left * y * right);
}

CVector basis(std::size_t dim, std::size_t i, Complex value = 1.0) {
  CVector v = CVector::Zero(static_cast<Index>(dim));
  v(static_cast<Index>(i)) = value;
  return v;
}

}  // namespace

Probe::Probe(std::vector<CVector> c_tuple, double t, CMatrix a, CMatrix b, CMatrix y)
    : c_tuple_(std::move(c_tuple)), t_(t), a_(std::move(a)), b_(std::move(b)), y_(std::move(y)) {
  const auto n = static_cast<Index>(c_tuple_.size());
  if (n == 0) throw DimensionError("probe: empty c-tuple");
  for (const auto& c : c_tuple_) {
    if (c.size() != c_tuple_.front().size()) throw DimensionError("probe: c-tuple lengths differ");
  }
  if (!(t_ >= 0.0)) throw DomainError("probe: time must be non-negative");
  if (a_.rows() != n || a_.cols() != n || b_.rows() != n || b_.cols() != n) {
    throw DimensionError("probe: A and B must be n x n");
  }
  if (y_.cols() != n || y_.rows() == 0 || y_.rows() % n != 0) {
    throw DimensionError("probe: Y must be (n dim_h) x n");
  }
  const Index dim_h = y_.rows() / n;
  double norm = weighted_norm(a_, y_, b_, dim_h);
  if (norm > 1.0) {
    y_ /= norm;
    for (norm = weighted_norm(a_, y_, b_, dim_h); norm > 1.0;
         norm = weighted_norm(a_, y_, b_, dim_h)) {
      y_ *= 1.0 - 4.0 * std::numeric_limits<double>::epsilon();
    }
  }
}

CMatrix varpi_matrix(const std::vector<CVector>& c_tuple, double t) {
  if (!(t >= 0.0)) throw DomainError("varpi_matrix: time must be non-negative");
  const auto n = static_cast<Index>(c_tuple.size());
  CMatrix out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      out(i, j) = i == j ? Complex(1.0) : std::exp(-t * chi(c_tuple[static_cast<std::size_t>(i)],
                                                            c_tuple[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

CMatrix q_schur_y(const SemigroupFamily& family, const Probe& probe) {
  const auto h = static_cast<Index>(family.source().dim_h());
  const auto n = static_cast<Index>(probe.n());
  if (probe.Y().rows() != n * h) {
    throw DimensionError("probe: Y blocks do not match the generator's dim_h");
  }
  CMatrix out(n * h, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const CMatrix q = family.q(probe.c_tuple()[static_cast<std::size_t>(i)],
                                 probe.c_tuple()[static_cast<std::size_t>(j)], probe.t());
      out.block(i * h, j, h, 1) = q * probe.Y().block(i * h, j, h, 1);
    }
  }
  return out;
}

ProbeReport schur_criterion_check(const SemigroupFamily& family, const Probe& probe,
                                  double tolerance, std::size_t probe_id) {
  ProbeReport report;
  report.probe_id = probe_id;
  report.n = probe.n();
  report.t = probe.t();
  const CMatrix qy = q_schur_y(family, probe);
  const CMatrix w = varpi_matrix(probe.c_tuple(), probe.t());
  try {
    const double norm = weighted_norm(schur_product(probe.A(), w), qy, schur_product(probe.B(), w),
                                      static_cast<Index>(family.source().dim_h()));
    report.defect = norm - 1.0;
    report.pass = report.defect <= tolerance;
  } catch (const NumericalError&) {
    report.skipped = true;
    report.pass = false;
  }
  return report;
}

std::vector<Probe> core_probes(std::size_t dim_h, std::size_t dim_k,
                               const std::vector<CVector>& extra) {
  std::vector<CVector> cs{CVector::Zero(static_cast<Index>(dim_k))};
  for (std::size_t i = 0; i < dim_k; ++i) {
    for (const Complex phase : {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0),
                                Complex(0.0, -1.0)}) {
      cs.push_back(basis(dim_k, i, phase));
    }
  }
  cs.insert(cs.end(), extra.begin(), extra.end());
  const CMatrix one = CMatrix::Ones(1, 1);
  std::vector<Probe> out;
  for (const auto& c : cs) {
    for (double t : {0.1, 0.5, 1.0}) {
      for (std::size_t a = 0; a < dim_h; ++a) {
        out.emplace_back(std::vector<CVector>{c}, t, one, one, CMatrix(basis(dim_h, a)));
      }
    }
  }
  return out;
}

std::vector<ProbeReport> screen_family(const BlockGenerator& f, std::size_t n_max,
                                       std::size_t samples, std::uint64_t seed, double tolerance) {
  if (n_max == 0) throw DomainError("screen_family: n_max must be at least 1");
  const SemigroupFamily family(f);
  const auto dim_h = static_cast<Index>(f.dim_h());
  const auto dim_k = static_cast<Index>(f.dim_k());
  Rng rng(seed);

  std::vector<CVector> extra;
  for (int i = 0; i < 2 && dim_k > 0; ++i) extra.push_back(rng.vector(dim_k, 0.7));

  std::vector<ProbeReport> reports;
  std::size_t id = 0;
  for (const auto& probe : core_probes(f.dim_h(), f.dim_k(), extra)) {
    reports.push_back(schur_criterion_check(family, probe, tolerance, id++));
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const auto n = static_cast<Index>(1 + rng.next() % n_max);
    std::vector<CVector> cs{CVector::Zero(dim_k)};
    for (Index i = 1; i < n; ++i) cs.push_back(rng.vector(dim_k, rng.uniform(0.1, 1.0)));
    const double t = rng.uniform(0.0, 2.0);
    CMatrix a = rng.positive_definite(n);
    CMatrix b = rng.positive_definite(n);
    CMatrix y = rng.matrix(n * dim_h, n);
    const double pre = weighted_norm(a, y, b, dim_h);
    if (pre > 0.0) y /= pre;
    const Probe probe(std::move(cs), t, std::move(a), std::move(b), std::move(y));
    reports.push_back(schur_criterion_check(family, probe, tolerance, id++));
  }
  std::stable_sort(reports.begin(), reports.end(), [](const ProbeReport& l, const ProbeReport& r) {
    if (l.defect != r.defect) return l.defect > r.defect;
    return l.probe_id < r.probe_id;
  });
  return reports;
}

void write_probe_csv(std::ostream& out, const std::vector<ProbeReport>& reports) {
  out << "probe_id,n,t,defect,pass,skipped\n";
  char line[160];
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%zu,%zu,%.17g,%.17g,%d,%d\n", r.probe_id, r.n, r.t, r.defect,
                  r.pass ? 1 : 0, r.skipped ? 1 : 0);
    out << line;
  }
}

std::vector<std::pair<CVector, CVector>> basis_pairs(std::size_t dim_k) {
  std::vector<CVector> ds{CVector::Zero(static_cast<Index>(dim_k))};
  for (std::size_t i = 0; i < dim_k; ++i) ds.push_back(basis(dim_k, i));
  std::vector<std::pair<CVector, CVector>> out;
  for (const auto& c : ds) {
    for (const auto& d : ds) out.emplace_back(c, d);
  }
  return out;
}

ConvergenceReport trotter_kato_pipeline(const BlockGenerator& f, const std::vector<int>& n_list,
                                        const std::vector<std::pair<CVector, CVector>>& probe_pairs,
                                        double horizon, std::size_t grid_points, double tolerance) {
  if (contractivity_defect(f) > tolerance) {
    throw DomainError("trotter_kato_pipeline: generator is not contractive");
  }
  if (n_list.empty()) throw DomainError("trotter_kato_pipeline: empty n list");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] <= 0 || (i > 0 && n_list[i] <= n_list[i - 1])) {
      throw DomainError("trotter_kato_pipeline: n list must be positive and increasing");
    }
  }
  if (!(horizon > 0.0) || grid_points == 0) {
    throw DomainError("trotter_kato_pipeline: need a positive horizon and at least one grid point");
  }

  const SemigroupFamily exact(f);
  ConvergenceReport report;
  report.n_list = n_list;
  std::vector<std::vector<double>> per_pair(probe_pairs.size());
  for (int n : n_list) {
    const SemigroupFamily approx(yosida_approx(f, n));
    double worst = 0.0;
    for (std::size_t p = 0; p < probe_pairs.size(); ++p) {
      const auto& [c, d] = probe_pairs[p];
      double sup = 0.0;
      for (std::size_t k = 1; k <= grid_points; ++k) {
        const double t = horizon * static_cast<double>(k) / static_cast<double>(grid_points);
        sup = std::max(sup, op_norm(approx.q(c, d, t) - exact.q(c, d, t)));
      }
      report.rows.push_back(ConvergenceRow{n, p, sup});
      per_pair[p].push_back(sup);
      worst = std::max(worst, sup);
    }
    report.max_error.push_back(worst);
  }
  for (const auto& errors : per_pair) {
    for (std::size_t i = 1; i < errors.size(); ++i) {
      if (errors[i] > 1.1 * errors[i - 1]) report.monotone = false;
    }
  }
  return report;
}

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report) {
  out << "n,pair_id,sup_error\n";
  char line[128];
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof line, "%d,%zu,%.17g\n", row.n, row.pair_id, row.sup_error);
    out << line;
  }
}

}  // namespace qsc
