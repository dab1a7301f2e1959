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

#include <benchmark/benchmark.h>

#include "qsc/qsc.hpp"
#include "qsc/random.hpp"

namespace {

using namespace qsc;

void BM_MatExp(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  CMatrix a = rng.matrix(n, n);
  a *= 2.0 / op_norm(a);
  for (auto _ : state) benchmark::DoNotOptimize(mat_exp(a));
}
BENCHMARK(BM_MatExp)->Arg(2)->Arg(8)->Arg(32);

void BM_SlicedElement(benchmark::State& state) {
  const BlockGenerator f = random_contractive(4, 2, 2, RandomMode::kUnitaryC);
  Rng rng(2);
  std::vector<double> points;
  std::vector<CVector> values;
  for (int j = 0; j < state.range(0); ++j) {
    points.push_back(0.1 * j);
    values.push_back(rng.vector(2, 0.5));
  }
  const StepFunction g(points, values, 0.1 * static_cast<double>(state.range(0)));
  for (auto _ : state) {
    // fresh family: measures the exponentials, not the cache
    const SemigroupFamily family(f);
    benchmark::DoNotOptimize(sliced_element(family, g, g, g.support_end()).matrix);
  }
}
BENCHMARK(BM_SlicedElement)->Arg(1)->Arg(8)->Arg(64);

void BM_OracleSlice(benchmark::State& state) {
  const BlockGenerator f = random_contractive(4, 2, 3, RandomMode::kUnitaryC);
  const StepFunction g = StepFunction::constant(CVector::Constant(2, 0.3), 1.0);
  const ToyLattice lattice(static_cast<std::size_t>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_slice(f, g, g, lattice));
}
BENCHMARK(BM_OracleSlice)->Arg(256)->Arg(4096);

void BM_OracleStateNorm(benchmark::State& state) {
  const BlockGenerator f = random_contractive(1, 1, 4, RandomMode::kUnitaryC);
  const StepFunction g = StepFunction::constant(CVector::Constant(1, 0.3), 1.0);
  const CVector v = CVector::Ones(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_state_norm(f, v, g, 1.0, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_OracleStateNorm)->Arg(12)->Arg(16);

void BM_ScreenFamily(benchmark::State& state) {
  const BlockGenerator f = random_contractive(2, 2, 5, RandomMode::kStrictC);
  for (auto _ : state) {
    benchmark::DoNotOptimize(screen_family(f, 4, static_cast<std::size_t>(state.range(0)), 6));
  }
}
BENCHMARK(BM_ScreenFamily)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
