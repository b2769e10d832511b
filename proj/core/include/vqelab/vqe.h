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

#ifndef VQELAB_VQE_H_
#define VQELAB_VQE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vqelab/ansatz.h"
#include "vqelab/energy.h"
#include "vqelab/noise.h"
#include "vqelab/optimizer.h"
#include "vqelab/pauli.h"

namespace vqelab {

enum class InitKind { kRandom, kExplicit, kWarmStart };

std::string_view InitKindName(InitKind kind);
std::optional<InitKind> InitKindFromName(std::string_view name);

struct InitialParams {
  InitKind kind = InitKind::kRandom;  // random: uniform [0, 2pi) per slot
  std::vector<double> values;         // kExplicit
  std::size_t warm_iters = 2000;      // kWarmStart

  friend bool operator==(const InitialParams&, const InitialParams&) = default;
};

struct VqeConfig {
  AnsatzSpec ansatz;
  std::string hamiltonian;  // path of a .ham file
  NoiseConfig noise;
  EstimatorOptions estimator;
  OptimizerKind optimizer = OptimizerKind::kSpsa;
  SpsaGains spsa;
  GdGains gd;
  Budget budget;
  std::uint64_t seed = 1;
  InitialParams initial;
  // Starting value of the iteration counter, so a continuation keeps the
  // gain schedule of the run it continues. Budgets count from here.
  std::size_t iteration_offset = 0;
  bool record_parameters = true;

  void Validate() const;

  friend bool operator==(const VqeConfig&, const VqeConfig&) = default;
};

// Every random stream of a run is derived from the master seed.
struct RunSeeds {
  std::uint64_t master = 0;
  std::uint64_t init = 0;
  std::uint64_t optimizer = 0;
  std::uint64_t noise = 0;
  std::uint64_t warm_start = 0;

  static RunSeeds Derive(std::uint64_t master);

  friend bool operator==(const RunSeeds&, const RunSeeds&) = default;
};

struct LoggedFault {
  std::size_t evaluation = 0;  // index among the step's objective calls
  FaultEvent event;

  friend bool operator==(const LoggedFault&, const LoggedFault&) = default;
};

struct IterationRecord {
  std::size_t t = 0;
  std::vector<double> theta;  // theta_t; empty unless record_parameters
  double energy = 0.0;        // mean of the step's objective values
  std::vector<LoggedFault> faults;
  std::size_t evaluations = 0;       // objective calls in this step
  std::size_t objective_calls = 0;   // cumulative, after this step

  bool erroneous() const { return !faults.empty(); }

  friend bool operator==(const IterationRecord&,
                         const IterationRecord&) = default;
};

struct RunRecord {
  VqeConfig config;
  RunSeeds seeds;
  std::size_t n_params = 0;
  std::size_t measurement_circuits = 0;
  std::vector<double> initial_theta;
  std::vector<IterationRecord> iterations;
  std::vector<double> final_theta;
  double final_energy = 0.0;            // fresh noisy evaluation at theta_T
  double final_energy_noiseless = 0.0;  // exact expectation at theta_T
  std::vector<double> best_theta;
  double best_energy = 0.0;             // lowest objective value seen
  std::size_t objective_calls = 0;
  std::string stop_reason;
  bool aborted = false;
  std::string abort_message;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// Loads config.hamiltonian; throws ErrorCode::kData if it is unreadable.
RunRecord RunVqe(const VqeConfig& config);
RunRecord RunVqe(const VqeConfig& config, const PauliSum& h);

// Noiseless run of `iters` iterations from the config's own random start;
// returns the best parameters seen.
std::vector<double> WarmStart(const VqeConfig& config, const PauliSum& h,
                              std::size_t iters);

nlohmann::json RunRecordToJson(const RunRecord& record);

}  // namespace vqelab

#endif  // VQELAB_VQE_H_
