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

#include "qsc/toyfock.hpp"

#include <cmath>
#include <sstream>

#include "qsc/error.hpp"

namespace qsc {
namespace {

using Index = Eigen::Index;

// Slot vector (1, sqrt(tau) x).
CVector slot_vector(const CVector& x, double sqrt_tau) {
  CVector out(x.size() + 1);
  out(0) = 1.0;
  out.tail(x.size()) = sqrt_tau * x;
  return out;
}

// E^{xi} G E_{eta} = sum_{alpha,beta} conj(xi_alpha) eta_beta G_{alpha beta}.
CMatrix contract_slot(const CMatrix& step, const CVector& xi, const CVector& eta, Index h) {
  CMatrix out = CMatrix::Zero(h, h);
  for (Index alpha = 0; alpha < xi.size(); ++alpha) {
    const Complex left = std::conj(xi(alpha));
    if (left == Complex(0.0)) continue;
    for (Index beta = 0; beta < eta.size(); ++beta) {
      const Complex w = left * eta(beta);
      if (w == Complex(0.0)) continue;
      out += w * step.block(alpha * h, beta * h, h, h);
    }
  }
  return out;
}

}  // namespace

ToyLattice::ToyLattice(std::size_t n, double t) : steps(n), horizon(t), tau(0.0) {
  if (n == 0) throw DomainError("toy lattice: need at least one step");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("toy lattice: horizon must be positive");
  tau = t / static_cast<double>(n);
}

StepContraction step_matrix(const BlockGenerator& f, double tau) {
  if (!(tau > 0.0)) throw DomainError("step_matrix: tau must be positive");
  const auto h = static_cast<Index>(f.dim_h());
  const auto hk = static_cast<Index>(f.dim_h() * f.dim_k());
  const double root = std::sqrt(tau);
  CMatrix g(h + hk, h + hk);
  g.topLeftCorner(h, h) = CMatrix::Identity(h, h) + tau * f.K();
  g.topRightCorner(h, hk) = root * f.M();
  g.bottomLeftCorner(hk, h) = root * f.L();
  g.bottomRightCorner(hk, hk) = f.C();
  return StepContraction{std::move(g)};
}

CMatrix oracle_slice(const BlockGenerator& f_gen, const StepFunction& f, const StepFunction& g,
                     const ToyLattice& lattice) {
  if (f.dim_k() != f_gen.dim_k() || g.dim_k() != f_gen.dim_k()) {
    throw DimensionError("oracle: step functions do not match the generator's dim_k");
  }
  const auto h = static_cast<Index>(f_gen.dim_h());
  const CMatrix step = step_matrix(f_gen, lattice.tau).matrix;
  const double root = std::sqrt(lattice.tau);
  CMatrix acc = CMatrix::Identity(h, h);
  for (std::size_t j = 0; j < lattice.steps; ++j) {
    const double s = lattice.horizon * static_cast<double>(j) / static_cast<double>(lattice.steps);
    acc = acc * contract_slot(step, slot_vector(f(s), root), slot_vector(g(s), root), h);
  }
  return acc;
}

Complex oracle_matrix_element(const BlockGenerator& f_gen, const CVector& u, const StepFunction& f,
                              const CVector& v, const StepFunction& g, double t, std::size_t steps) {
  const auto h = static_cast<Index>(f_gen.dim_h());
  if (u.size() != h || v.size() != h) {
    throw DimensionError("oracle_matrix_element: u and v must have length dim_h");
  }
  if (t == 0.0) return u.dot(v) * exp_inner(f, g, 0.0);
  const ToyLattice lattice(steps, t);
  return u.dot(oracle_slice(f_gen, f, g, lattice) * v) * exp_inner(f, g, t);
}

StateNorm oracle_state_norm(const BlockGenerator& f_gen, const CVector& v, const StepFunction& g,
                            double t, std::size_t steps, std::size_t budget) {
  const std::size_t dim_h = f_gen.dim_h();
  const std::size_t slot_dim = 1 + f_gen.dim_k();
  if (static_cast<std::size_t>(v.size()) != dim_h) {
    throw DimensionError("oracle_state_norm: v must have length dim_h");
  }
  if (g.dim_k() != f_gen.dim_k()) {
    throw DimensionError("oracle_state_norm: g does not match the generator's dim_k");
  }
  const ToyLattice lattice(steps, t);
  std::size_t noise_dim = 1;
  bool over = false;
  for (std::size_t j = 0; j < steps && !over; ++j) {
    if (noise_dim > budget / slot_dim) over = true;
    noise_dim *= slot_dim;
  }
  if (over || noise_dim > budget / dim_h) {
    std::ostringstream msg;
    msg << "oracle_state_norm: state dimension " << dim_h << " * " << slot_dim << "^" << steps
        << " exceeds the budget of " << budget;
    throw BudgetError(msg.str());
  }
  const std::size_t total = dim_h * noise_dim;

  // index = a * noise_dim + sum_j alpha_j * slot_dim^(N-1-j), slot 0 most significant.
  const double root = std::sqrt(lattice.tau);
  std::vector<CVector> slots;
  slots.reserve(steps);
  double reference_sq = v.squaredNorm();
  for (std::size_t j = 0; j < steps; ++j) {
    const double s = lattice.horizon * static_cast<double>(j) / static_cast<double>(steps);
    slots.push_back(slot_vector(g(s), root));
    reference_sq *= slots.back().squaredNorm();
  }
  CVector state(static_cast<Index>(total));
  for (std::size_t a = 0; a < dim_h; ++a) {
    for (std::size_t idx = 0; idx < noise_dim; ++idx) {
      Complex amp = v(static_cast<Index>(a));
      std::size_t rest = idx;
      for (std::size_t j = steps; j-- > 0;) {
        amp *= slots[j](static_cast<Index>(rest % slot_dim));
        rest /= slot_dim;
      }
      state(static_cast<Index>(a * noise_dim + idx)) = amp;
    }
  }

  // V_N = G^(1) ... G^(N): apply the last slot first.
  const CMatrix step = step_matrix(f_gen, lattice.tau).matrix;
  const auto local = static_cast<Index>(dim_h * slot_dim);
  CVector gathered(local);
  std::size_t stride = 1;
  for (std::size_t j = steps; j-- > 0;) {
    const std::size_t outer = noise_dim / (stride * slot_dim);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < stride; ++i) {
        const std::size_t base = o * stride * slot_dim + i;
        for (std::size_t alpha = 0; alpha < slot_dim; ++alpha) {
          for (std::size_t a = 0; a < dim_h; ++a) {
            gathered(static_cast<Index>(alpha * dim_h + a)) =
                state(static_cast<Index>(a * noise_dim + base + alpha * stride));
          }
        }
        const CVector moved = step * gathered;
        for (std::size_t alpha = 0; alpha < slot_dim; ++alpha) {
          for (std::size_t a = 0; a < dim_h; ++a) {
            state(static_cast<Index>(a * noise_dim + base + alpha * stride)) =
                moved(static_cast<Index>(alpha * dim_h + a));
          }
        }
      }
    }
    stride *= slot_dim;
  }
  return StateNorm{state.norm(), std::sqrt(reference_sq), total};
}

}  // namespace qsc
