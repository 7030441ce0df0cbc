// Copyright 2026 The circle-npd Authors
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

#include <vector>

#include "circle_npd/alpha_max.hpp"
#include "circle_npd/grid_oracle.hpp"
#include "circle_npd/npd.hpp"
#include "circle_npd/periodic_function.hpp"

namespace {

// phi(theta) = (1/2) sin 2theta, psi(theta) = sin theta: four optimal
// rotations, the hardest of the stock inputs.
npd::PeriodicFunction make_phi() { return npd::PeriodicFunction::fourier(0.0, {}, {0.0, 0.5}); }
npd::PeriodicFunction make_psi() { return npd::PeriodicFunction::fourier(0.0, {}, {1.0}); }

void BM_EvalGrid(benchmark::State& state) {
  const npd::PeriodicFunction psi = make_psi();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> out(n);
  for (auto _ : state) {
    psi.eval_grid(0.0, npd::kTau / static_cast<double>(n), n, 0, out.data());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * static_cast<int64_t>(n));
}
BENCHMARK(BM_EvalGrid)->Arg(4096)->Arg(65536);

void BM_SectionMax(benchmark::State& state) {
  const npd::PeriodicFunction phi = make_phi();
  const npd::PeriodicFunction psi = make_psi();
  for (auto _ : state) {
    npd::AlphaMaxResult r = npd::f_alpha_max(phi, psi, 0.7);
    benchmark::DoNotOptimize(r.g_value);
  }
}
BENCHMARK(BM_SectionMax);

void BM_GridOracle(benchmark::State& state) {
  const npd::PeriodicFunction phi = make_phi();
  const npd::PeriodicFunction psi = make_psi();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    npd::GridOracleResult r = npd::grid_oracle(phi, psi, n, n);
    benchmark::DoNotOptimize(r.bracket.upper);
  }
}
BENCHMARK(BM_GridOracle)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_ComputeNpd(benchmark::State& state) {
  const npd::PeriodicFunction phi = make_phi();
  const npd::PeriodicFunction psi = make_psi();
  for (auto _ : state) {
    npd::NpdResult r = npd::compute_npd(phi, psi);
    benchmark::DoNotOptimize(r.distance);
  }
}
BENCHMARK(BM_ComputeNpd)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
