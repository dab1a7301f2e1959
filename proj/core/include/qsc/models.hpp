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

// Concrete generators. Models that truncate an infinite-dimensional h
// report the interior levels on which the untruncated identities hold.

#include <cstdint>
#include <vector>

#include "qsc/generator.hpp"

namespace qsc {

struct Model {
  BlockGenerator generator;
  /// Basis levels of h unaffected by truncation.
  std::vector<std::size_t> interior;
};

struct OscillatorSpec {
  std::size_t dim = 2;
  /// lambda(0..dim)
  std::vector<Complex> lambda;
  /// mu(0..dim-1)
  std::vector<double> mu;
};

/// Inverse harmonic oscillator on the truncation C^dim of l^2(Z_+):
/// K = nu(N) with nu(n) = i mu(n) - |lambda(n+1)|^2 / 2, L = -lambda(N) W,
/// M = W* conj(lambda)(N), C = I, dim_k = 1, where W is the right shift
/// (e_{dim-1} -> 0) and N the number operator. Interior: levels 0..dim-2.
Model inverse_oscillator(const OscillatorSpec& spec);

/// Birth-death chain on {0..dim-1} with two noise channels:
/// L_1 = sqrt(birth) (up-shift), L_2 = sqrt(death) (down-shift), H = 0,
/// C = I, K = -L*L/2, M = -L*. Jumps leaving {0..dim-1} are dropped.
/// Interior: levels 1..dim-2.
Model birth_death(std::size_t dim, const std::vector<double>& birth_rates,
                  const std::vector<double>& death_rates);

/// Classical rate matrix of the same (truncated) chain:
/// R(n, n+1) = birth(n), R(n, n-1) = death(n), rows summing to zero.
Eigen::MatrixXd birth_death_rate_matrix(std::size_t dim, const std::vector<double>& birth_rates,
                                        const std::vector<double>& death_rates);

enum class RandomMode { kUnitaryC, kStrictC };

/// Random generator built through from_hlc. kUnitaryC draws a Haar-like
/// unitary C and lands in the equality case; kStrictC uses |C| <= 0.9 and
/// adds a damping -0.05 I to K, so F + F* + F* Delta F <= -0.05.
BlockGenerator random_contractive(std::size_t dim_h, std::size_t dim_k, std::uint64_t seed,
                                  RandomMode mode);

}  // namespace qsc
