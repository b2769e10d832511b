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

#include "vqelab/noise.h"

#include <cmath>
#include <numbers>
#include <string>

#include "vqelab/error.h"
#include "vqelab/parallel.h"
#include "vqelab/stats.h"

namespace vqelab {

std::string_view NoiseModeName(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::kNone: return "none";
    case NoiseMode::kPerGateRate: return "per_gate_rate";
    case NoiseMode::kErroneousRatio: return "erroneous_ratio";
  }
  return "?";
}

std::optional<NoiseMode> NoiseModeFromName(std::string_view name) {
  for (NoiseMode m :
       {NoiseMode::kNone, NoiseMode::kPerGateRate, NoiseMode::kErroneousRatio}) {
    if (NoiseModeName(m) == name) return m;
  }
  return std::nullopt;
}

void NoiseConfig::Validate() const {
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw Error(ErrorCode::kConfig, "noise probability " +
                                        std::to_string(probability) +
                                        " outside [0, 1]");
  }
}

std::vector<FaultSite> SampleFaults(std::span<const FaultLocation> sites,
                                    const NoiseConfig& config, Rng& rng) {
  std::vector<FaultSite> faults;
  if (config.IsSilent() || sites.empty()) return faults;
  switch (config.mode) {
    case NoiseMode::kNone:
      break;
    case NoiseMode::kPerGateRate:
      for (const FaultLocation& loc : sites) {
        if (rng.Bernoulli(config.probability)) {
          faults.push_back({loc, kFaultPaulis[rng.UniformInt(3)]});
        }
      }
      break;
    case NoiseMode::kErroneousRatio:
      if (rng.Bernoulli(config.probability)) {
        const FaultLocation& loc = sites[rng.UniformInt(sites.size())];
        faults.push_back({loc, kFaultPaulis[rng.UniformInt(3)]});
      }
      break;
  }
  return faults;
}

std::vector<FaultSite> SampleFaults(const Circuit& circuit,
                                    const NoiseConfig& config, Rng& rng) {
  const auto sites = FaultSites(circuit);
  return SampleFaults(sites, config, rng);
}

StateVector ExecuteWithFaults(const Circuit& circuit,
                              std::span<const double> theta,
                              std::span<const FaultSite> faults) {
  if (theta.size() != circuit.n_params()) {
    throw Error(ErrorCode::kArity,
                "got " + std::to_string(theta.size()) +
                    " parameters for " + std::to_string(circuit.n_params()) +
                    " slots");
  }
  const std::size_t n_gates = circuit.size();
  for (const FaultSite& f : faults) {
    const FaultLocation& loc = f.location;
    const bool bad_gate =
        loc.kind == SiteKind::kAfterGate && loc.gate_index >= n_gates;
    if (bad_gate || loc.qubit < 0 || loc.qubit >= circuit.n_qubits() ||
        f.pauli == Pauli::kI) {
      throw Error(ErrorCode::kIndex, "fault site invalid for circuit");
    }
  }
  auto apply_faults = [&](StateVector& s, SiteKind kind, std::size_t index) {
    for (const FaultSite& f : faults) {
      if (f.location.kind != kind) continue;
      if (kind == SiteKind::kAfterGate && f.location.gate_index != index) {
        continue;
      }
      s.ApplyPauli(f.pauli, f.location.qubit);
    }
  };

  StateVector state = StateVector::Zero(circuit.n_qubits());
  apply_faults(state, SiteKind::kPreparation, 0);
  for (std::size_t i = 0; i < n_gates; ++i) {
    state.Apply(circuit.gates()[i], theta);
    apply_faults(state, SiteKind::kAfterGate, i);
  }
  apply_faults(state, SiteKind::kMeasurement, 0);
  return state;
}

namespace {

void AppendEntries(FidelityMap& map, const FaultLocation& loc,
                   const StateVector& state) {
  const auto bloch = BlochVector(state, loc.qubit);
  for (int k = 0; k < 3; ++k) {
    double f = bloch[k] * bloch[k];
    if (f > 1.0) f = 1.0;
    map.push_back({loc, kFaultPaulis[k], f});
  }
}

}  // namespace

FidelityMap ExhaustiveFaultSweep(const Circuit& circuit,
                                 std::span<const double> theta,
                                 FaultSiteOptions options) {
  if (theta.size() != circuit.n_params()) {
    throw Error(ErrorCode::kArity,
                "got " + std::to_string(theta.size()) +
                    " parameters for " + std::to_string(circuit.n_params()) +
                    " slots");
  }
  FidelityMap map;
  StateVector state = StateVector::Zero(circuit.n_qubits());
  if (options.include_preparation) {
    for (int q = 0; q < circuit.n_qubits(); ++q) {
      AppendEntries(map, {SiteKind::kPreparation, 0, q}, state);
    }
  }
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit.gates()[i];
    state.Apply(g, theta);
    AppendEntries(map, {SiteKind::kAfterGate, i, g.FaultQubit()}, state);
  }
  if (options.include_measurement) {
    for (int q = 0; q < circuit.n_qubits(); ++q) {
      AppendEntries(map, {SiteKind::kMeasurement, circuit.size(), q}, state);
    }
  }
  return map;
}

FidelityMap ExhaustiveFaultSweepByReexecution(const Circuit& circuit,
                                              std::span<const double> theta,
                                              FaultSiteOptions options) {
  const StateVector ideal = Execute(circuit, theta);
  FidelityMap map;
  for (const FaultLocation& loc : FaultSites(circuit, options)) {
    for (Pauli p : kFaultPaulis) {
      const FaultSite fault{loc, p};
      const StateVector faulty =
          ExecuteWithFaults(circuit, theta, std::span(&fault, 1));
      map.push_back({loc, p, Fidelity(ideal, faulty)});
    }
  }
  return map;
}

double MeanFidelity(const FidelityMap& map) {
  if (map.empty()) {
    throw Error(ErrorCode::kUndefined, "mean of an empty fidelity map");
  }
  KahanSum acc;
  for (const FidelityEntry& e : map) acc.Add(e.fidelity);
  return acc.value() / static_cast<double>(map.size());
}

double AverageFidelity(const Circuit& circuit, int n_param_draws, Rng& rng,
                       int threads, FaultSiteOptions options) {
  if (n_param_draws < 1) {
    throw Error(ErrorCode::kConfig, "average fidelity needs >= 1 draw");
  }
  std::vector<std::vector<double>> draws(n_param_draws);
  for (auto& theta : draws) {
    theta.resize(circuit.n_params());
    for (double& t : theta) t = rng.Uniform(0.0, 2.0 * std::numbers::pi);
  }
  std::vector<double> means(n_param_draws);
  ParallelFor(draws.size(), threads, [&](std::size_t i) {
    means[i] = MeanFidelity(ExhaustiveFaultSweep(circuit, draws[i], options));
  });
  KahanSum acc;
  for (double m : means) acc.Add(m);
  return acc.value() / static_cast<double>(n_param_draws);
}

double ErOneFault(const Circuit& circuit, FaultSiteOptions options) {
  const std::size_t n = FaultSites(circuit, options).size();
  if (n == 0) {
    throw Error(ErrorCode::kUndefined, "circuit has no fault sites");
  }
  return 1.0 / static_cast<double>(n);
}

long long CsvGateIndex(const FaultLocation& location) {
  switch (location.kind) {
    case SiteKind::kPreparation: return -1;
    case SiteKind::kAfterGate:
    case SiteKind::kMeasurement:
      return static_cast<long long>(location.gate_index);
  }
  return 0;
}

void WriteFidelityCsv(std::ostream& out, const FidelityMap& map) {
  out << "gate_index,qubit,pauli,fidelity\n";
  for (const FidelityEntry& e : map) {
    out << CsvGateIndex(e.location) << ',' << e.location.qubit << ','
        << PauliChar(e.pauli) << ',' << FormatDouble(e.fidelity) << '\n';
  }
}

}  // namespace vqelab
