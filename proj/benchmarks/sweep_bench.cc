// Copyright 2026 The vqelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Forward-pass fault sweep against the re-execution route it replaces.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "vqelab/ansatz.h"
#include "vqelab/noise.h"
#include "vqelab/rng.h"

namespace {

std::vector<double> RandomTheta(const vqelab::Circuit& c) {
  vqelab::Rng rng(11);
  std::vector<double> theta(c.n_params());
  for (double& t : theta) t = rng.Uniform(0.0, 2.0 * std::numbers::pi);
  return theta;
}

void BM_SweepForward(benchmark::State& state) {
  const vqelab::Circuit c = vqelab::BuildRyrz(
      {static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  const std::vector<double> theta = RandomTheta(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vqelab::ExhaustiveFaultSweep(c, theta));
  }
}
BENCHMARK(BM_SweepForward)
    ->Args({2, 1})->Args({2, 20})->Args({6, 1})->Args({6, 20})
    ->Unit(benchmark::kMicrosecond);

void BM_SweepReexecution(benchmark::State& state) {
  const vqelab::Circuit c = vqelab::BuildRyrz(
      {static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  const std::vector<double> theta = RandomTheta(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        vqelab::ExhaustiveFaultSweepByReexecution(c, theta));
  }
}
BENCHMARK(BM_SweepReexecution)
    ->Args({2, 1})->Args({2, 20})->Args({6, 1})->Args({6, 20})
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
