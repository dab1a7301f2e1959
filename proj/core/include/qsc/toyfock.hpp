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

// Repeated-interaction ("toy Fock space") approximation of the cocycle.
//
// [0, t) is cut into N slots of width tau = t/N, each carrying a copy of
// C (+) k. One slot interacts with h through the Euler block step
//
//   G_tau = [ I + tau K    sqrt(tau) M ]
//           [ sqrt(tau) L  C           ]
//
// and the discrete cocycle is V_N = G^(1) G^(2) ... G^(N), slot j acting on
// h (x) slot_j. The discrete exponential vector of f is the product state
// (x)_j (1, sqrt(tau) f(s_j)) sampled at left endpoints s_j = (j-1) tau.
// Nothing here calls mat_exp, which keeps the oracle independent of the
// semigroup engine.

#include <cstddef>

#include "qsc/cocycle.hpp"

namespace qsc {

struct ToyLattice {
  ToyLattice(std::size_t steps, double horizon);
  std::size_t steps;
  double horizon;
  double tau;
};

struct StepContraction {
  CMatrix matrix;
};

StepContraction step_matrix(const BlockGenerator& f, double tau);

/// A_N = prod_{j=1..N} E^{xi_j} G_tau E_{eta_j} with xi_j = (1, sqrt(tau) f(s_j)),
/// eta_j = (1, sqrt(tau) g(s_j)); new slots multiply on the right.
CMatrix oracle_slice(const BlockGenerator& f_gen, const StepFunction& f, const StepFunction& g,
                     const ToyLattice& lattice);

/// <u, A_N v> times the continuous tail factor exp int_t^inf <f, g>.
Complex oracle_matrix_element(const BlockGenerator& f_gen, const CVector& u, const StepFunction& f,
                              const CVector& v, const StepFunction& g, double t, std::size_t steps);

/// Default limit on the discrete state dimension dim_h (1 + dim_k)^N.
inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 22;

struct StateNorm {
  /// |V_N (v (x) e_N(g))|
  double norm = 0.0;
  /// |v| |e_N(g)|, the value an isometric cocycle preserves
  double reference = 0.0;
  std::size_t state_dim = 0;
};

/// Builds the full discrete state V_N (v (x) e_N(g)) and returns its norm.
/// Throws BudgetError when dim_h (1 + dim_k)^N exceeds `budget`.
StateNorm oracle_state_norm(const BlockGenerator& f_gen, const CVector& v, const StepFunction& g,
                            double t, std::size_t steps, std::size_t budget = kDefaultStateBudget);

}  // namespace qsc
