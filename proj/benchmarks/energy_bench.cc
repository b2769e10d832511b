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

#include <benchmark/benchmark.h>

#include <vector>

#include "vqelab/ansatz.h"
#include "vqelab/energy.h"
#include "vqelab/noise.h"
#include "vqelab/pauli.h"
#include "vqelab/rng.h"

namespace {

using vqelab::EnergyEstimator;
using vqelab::Grouping;

void RunEnergy(benchmark::State& state, Grouping grouping,
               const vqelab::NoiseConfig& noise) {
  const vqelab::PauliSum h =
      vqelab::LoadHamiltonian(VQELAB_BENCH_DATA_DIR "/h4/d_1.00.ham");
  const vqelab::Circuit ansatz =
      vqelab::BuildRyrz({6, static_cast<int>(state.range(0))});
  const EnergyEstimator est(ansatz, h, {grouping, 0});
  const std::vector<double> theta(ansatz.n_params(), 0.3);
  vqelab::Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(est.Evaluate(theta, noise, rng).energy);
  }
  state.counters["circuits"] = static_cast<double>(est.circuits().size());
}

void BM_EnergyPerTerm(benchmark::State& state) {
  RunEnergy(state, Grouping::kPerTerm, vqelab::NoiseConfig::None());
}
BENCHMARK(BM_EnergyPerTerm)->Arg(1)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EnergyQubitWise(benchmark::State& state) {
  RunEnergy(state, Grouping::kQubitWise, vqelab::NoiseConfig::None());
}
BENCHMARK(BM_EnergyQubitWise)->Arg(1)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EnergyPerTermFaulty(benchmark::State& state) {
  RunEnergy(state, Grouping::kPerTerm,
            vqelab::NoiseConfig::ErroneousRatio(0.05));
}
BENCHMARK(BM_EnergyPerTermFaulty)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ExactEnergy(benchmark::State& state) {
  const vqelab::PauliSum h =
      vqelab::LoadHamiltonian(VQELAB_BENCH_DATA_DIR "/h4/d_1.00.ham");
  const vqelab::Circuit ansatz = vqelab::BuildRyrz({6, 20});
  const EnergyEstimator est(ansatz, h);
  const std::vector<double> theta(ansatz.n_params(), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(est.Exact(theta));
}
BENCHMARK(BM_ExactEnergy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
