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

#include "qsc/models.hpp"

#include <cmath>

#include "qsc/error.hpp"
#include "qsc/random.hpp"

namespace qsc {
namespace {

using Index = Eigen::Index;

void check_rates(std::size_t dim, const std::vector<double>& rates, const char* name) {
  if (rates.size() != dim) {
    throw DimensionError(std::string("birth_death: ") + name + " rates need one entry per level");
  }
  for (double r : rates) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw DomainError(std::string("birth_death: ") + name + " rates must be finite and non-negative");
    }
  }
}

}  // namespace

Model inverse_oscillator(const OscillatorSpec& spec) {
  const std::size_t dim = spec.dim;
  if (dim < 2) throw DomainError("inverse_oscillator: dim must be at least 2");
  if (spec.lambda.size() != dim + 1) {
    throw DimensionError("inverse_oscillator: lambda needs dim + 1 entries (levels 0..dim)");
  }
  if (spec.mu.size() != dim) throw DimensionError("inverse_oscillator: mu needs dim entries");
  for (const auto& l : spec.lambda) {
    if (!std::isfinite(l.real()) || !std::isfinite(l.imag())) {
      throw DomainError("inverse_oscillator: lambda must be finite");
    }
  }
  for (double m : spec.mu) {
    if (!std::isfinite(m)) throw DomainError("inverse_oscillator: mu must be finite");
  }

  const auto n = static_cast<Index>(dim);
  CMatrix k = CMatrix::Zero(n, n);
  CMatrix l = CMatrix::Zero(n, n);
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t level = 0; level < dim; ++level) {
    const auto i = static_cast<Index>(level);
    k(i, i) = Complex(-0.5 * std::norm(spec.lambda[level + 1]), spec.mu[level]);
    if (level + 1 < dim) {
      // L e_n = -lambda(n+1) e_{n+1};  M e_{n+1} = conj(lambda(n+1)) e_n
      l(i + 1, i) = -spec.lambda[level + 1];
      m(i, i + 1) = std::conj(spec.lambda[level + 1]);
    }
  }
  Model out{BlockGenerator::assemble(std::move(k), std::move(l), std::move(m),
                                     CMatrix::Identity(n, n), dim, 1),
            {}};
  for (std::size_t level = 0; level + 1 < dim; ++level) out.interior.push_back(level);
  return out;
}

Model birth_death(std::size_t dim, const std::vector<double>& birth_rates,
                  const std::vector<double>& death_rates) {
  if (dim < 3) throw DomainError("birth_death: dim must be at least 3");
  check_rates(dim, birth_rates, "birth");
  check_rates(dim, death_rates, "death");
  const auto n = static_cast<Index>(dim);
  CMatrix l = CMatrix::Zero(2 * n, n);
  for (Index level = 0; level < n; ++level) {
    const auto s = static_cast<std::size_t>(level);
    if (level + 1 < n) l(level + 1, level) = std::sqrt(birth_rates[s]);
    if (level > 0) l(n + level - 1, level) = std::sqrt(death_rates[s]);
  }
  Model out{from_hlc(CMatrix::Zero(n, n), l, CMatrix::Identity(2 * n, 2 * n)), {}};
  for (std::size_t level = 1; level + 1 < dim; ++level) out.interior.push_back(level);
  return out;
}

Eigen::MatrixXd birth_death_rate_matrix(std::size_t dim, const std::vector<double>& birth_rates,
                                        const std::vector<double>& death_rates) {
  if (dim < 3) throw DomainError("birth_death: dim must be at least 3");
  check_rates(dim, birth_rates, "birth");
  check_rates(dim, death_rates, "death");
  const auto n = static_cast<Index>(dim);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (Index level = 0; level < n; ++level) {
    const auto s = static_cast<std::size_t>(level);
    if (level + 1 < n) r(level, level + 1) = birth_rates[s];
    if (level > 0) r(level, level - 1) = death_rates[s];
    r(level, level) = -r.row(level).sum();
  }
  return r;
}

BlockGenerator random_contractive(std::size_t dim_h, std::size_t dim_k, std::uint64_t seed,
                                  RandomMode mode) {
  if (dim_h == 0) throw DomainError("random_contractive: dim_h must be positive");
  Rng rng(seed);
  const auto h = static_cast<Index>(dim_h);
  const auto hk = static_cast<Index>(dim_h * dim_k);
  const CMatrix ham = rng.hermitian(h, 0.5);
  const double l_scale = 0.5 / std::sqrt(static_cast<double>(std::max<std::size_t>(dim_k, 1)));
  const CMatrix l = rng.matrix(hk, h, l_scale);
  CMatrix c;
  if (mode == RandomMode::kUnitaryC) {
    c = rng.unitary(hk);
  } else {
    c = rng.matrix(hk, hk);
    const double norm = op_norm(c);
    const double target = 0.9 * rng.uniform(0.3, 1.0);
    if (norm > 0.0) c *= target / norm;
  }
  BlockGenerator f = from_hlc(ham, l, c);
  if (mode == RandomMode::kUnitaryC) return f;
  CMatrix damped = f.K();
  damped.diagonal().array() -= 0.05;
  return BlockGenerator::assemble(std::move(damped), f.L(), f.M(), f.C(), dim_h, dim_k);
}

}  // namespace qsc
