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

#include "vqelab/vqe.h"

#include <numbers>

#include "vqelab/config.h"
#include "vqelab/error.h"
#include "vqelab/stats.h"

namespace vqelab {

std::string_view InitKindName(InitKind kind) {
  switch (kind) {
    case InitKind::kRandom: return "random";
    case InitKind::kExplicit: return "explicit";
    case InitKind::kWarmStart: return "warm_start";
  }
  return "?";
}

std::optional<InitKind> InitKindFromName(std::string_view name) {
  for (InitKind k :
       {InitKind::kRandom, InitKind::kExplicit, InitKind::kWarmStart}) {
    if (InitKindName(k) == name) return k;
  }
  return std::nullopt;
}

void VqeConfig::Validate() const {
  ValidateAnsatzSpec(ansatz);
  noise.Validate();
  spsa.Validate();
  gd.Validate();
  budget.Validate();
  if (initial.kind == InitKind::kExplicit &&
      initial.values.size() != RyrzParameterCount(ansatz)) {
    throw Error(ErrorCode::kConfig,
                "explicit initial vector has " +
                    std::to_string(initial.values.size()) +
                    " entries, ansatz has " +
                    std::to_string(RyrzParameterCount(ansatz)) + " slots");
  }
  if (initial.kind == InitKind::kWarmStart && initial.warm_iters == 0) {
    throw Error(ErrorCode::kConfig, "warm start needs at least 1 iteration");
  }
}

RunSeeds RunSeeds::Derive(std::uint64_t master) {
  return {master, DeriveSeed(master, {1}), DeriveSeed(master, {2}),
          DeriveSeed(master, {3}), DeriveSeed(master, {4})};
}

namespace {

std::vector<double> RandomTheta(std::size_t n, Rng& rng) {
  std::vector<double> theta(n);
  for (double& t : theta) t = rng.Uniform(0.0, 2.0 * std::numbers::pi);
  return theta;
}

}  // namespace

RunRecord RunVqe(const VqeConfig& config) {
  config.Validate();
  return RunVqe(config, LoadHamiltonian(config.hamiltonian));
}

RunRecord RunVqe(const VqeConfig& config, const PauliSum& h) {
  config.Validate();
  const EnergyEstimator estimator(BuildRyrz(config.ansatz), h,
                                  config.estimator);
  RunRecord record;
  record.config = config;
  record.seeds = RunSeeds::Derive(config.seed);
  record.n_params = estimator.ansatz().n_params();
  record.measurement_circuits = estimator.circuits().size();

  switch (config.initial.kind) {
    case InitKind::kRandom: {
      Rng init_rng(record.seeds.init);
      record.initial_theta = RandomTheta(record.n_params, init_rng);
      break;
    }
    case InitKind::kExplicit:
      record.initial_theta = config.initial.values;
      break;
    case InitKind::kWarmStart: {
      VqeConfig warm = config;
      warm.seed = record.seeds.warm_start;
      warm.initial = {};
      record.initial_theta = WarmStart(warm, h, config.initial.warm_iters);
      break;
    }
  }

  Rng optimizer_rng(record.seeds.optimizer);
  Rng noise_rng(record.seeds.noise);
  std::vector<LoggedFault> step_faults;
  std::size_t evaluation = 0;
  const Objective objective = [&](std::span<const double> theta) {
    EnergyResult r = estimator.Evaluate(theta, config.noise, noise_rng);
    for (FaultEvent& e : r.faults) {
      step_faults.push_back({evaluation, std::move(e)});
    }
    ++evaluation;
    return r.energy;
  };

  OptimizerState state = OptimizerState::Start(record.initial_theta);
  state.t = config.iteration_offset;
  Budget budget = config.budget;
  if (budget.max_iterations > 0) budget.max_iterations += config.iteration_offset;

  Decision decision = ShouldTerminate(state, budget);
  while (!decision.stop) {
    IterationRecord it;
    it.t = state.t;
    if (config.record_parameters) it.theta = state.theta;
    step_faults.clear();
    evaluation = 0;
    StepResult step;
    try {
      step = config.optimizer == OptimizerKind::kSpsa
                 ? SpsaStep(state, config.spsa, objective, optimizer_rng)
                 : FdGradientStep(state, config.gd, objective);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNumeric) throw;
      record.aborted = true;
      record.abort_message = e.what();
      break;
    }
    it.energy = Mean(step.values);
    it.faults = std::move(step_faults);
    it.evaluations = step.values.size();
    it.objective_calls = state.objective_calls;
    record.iterations.push_back(std::move(it));
    decision = ShouldTerminate(state, budget);
  }

  record.stop_reason = record.aborted ? "numeric_error"
                                      : std::string(StopReasonName(decision.reason));
  record.final_theta = state.theta;
  record.final_energy =
      estimator.Evaluate(state.theta, config.noise, noise_rng).energy;
  record.final_energy_noiseless = estimator.Exact(state.theta);
  record.best_theta = state.best_theta;
  record.best_energy = state.best_energy;
  record.objective_calls = state.objective_calls;
  return record;
}

std::vector<double> WarmStart(const VqeConfig& config, const PauliSum& h,
                              std::size_t iters) {
  if (iters == 0) {
    throw Error(ErrorCode::kConfig, "warm start needs at least 1 iteration");
  }
  VqeConfig warm = config;
  warm.noise = NoiseConfig::None();
  warm.budget = Budget{};
  warm.budget.max_iterations = iters;
  warm.record_parameters = false;
  if (warm.initial.kind == InitKind::kWarmStart) warm.initial = {};
  return RunVqe(warm, h).best_theta;
}

namespace {

nlohmann::json FaultToJson(const LoggedFault& f) {
  const FaultLocation& loc = f.event.site.location;
  return {{"evaluation", f.evaluation},
          {"circuit", f.event.circuit_id},
          {"site_kind", SiteKindName(loc.kind)},
          {"gate_index", CsvGateIndex(loc)},
          {"qubit", loc.qubit},
          {"pauli", std::string(1, PauliChar(f.event.site.pauli))}};
}

}  // namespace

nlohmann::json RunRecordToJson(const RunRecord& record) {
  nlohmann::json iterations = nlohmann::json::array();
  for (const IterationRecord& it : record.iterations) {
    nlohmann::json faults = nlohmann::json::array();
    for (const LoggedFault& f : it.faults) faults.push_back(FaultToJson(f));
    nlohmann::json j = {{"t", it.t},
                        {"energy", it.energy},
                        {"erroneous", it.erroneous()},
                        {"evaluations", it.evaluations},
                        {"objective_calls", it.objective_calls},
                        {"faults", std::move(faults)}};
    if (!it.theta.empty()) j["theta"] = it.theta;
    iterations.push_back(std::move(j));
  }
  const nlohmann::json config = VqeConfigToJson(record.config);
  return {
      {"config", config},
      {"config_hash", ConfigHash(config)},
      {"seeds",
       {{"master", record.seeds.master},
        {"init", record.seeds.init},
        {"optimizer", record.seeds.optimizer},
        {"noise", record.seeds.noise},
        {"warm_start", record.seeds.warm_start}}},
      {"n_params", record.n_params},
      {"measurement_circuits", record.measurement_circuits},
      {"initial_theta", record.initial_theta},
      {"iterations", std::move(iterations)},
      {"final",
       {{"theta", record.final_theta},
        {"energy", record.final_energy},
        {"energy_noiseless", record.final_energy_noiseless},
        {"best_theta", record.best_theta},
        {"best_energy", record.best_energy},
        {"objective_calls", record.objective_calls},
        {"stop_reason", record.stop_reason},
        {"aborted", record.aborted},
        {"abort_message", record.abort_message}}},
  };
}

}  // namespace vqelab
