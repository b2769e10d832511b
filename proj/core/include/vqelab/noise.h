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

// Pauli fault models and exhaustive single-fault characterization.

#ifndef VQELAB_NOISE_H_
#define VQELAB_NOISE_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "vqelab/circuit.h"
#include "vqelab/pauli.h"
#include "vqelab/rng.h"
#include "vqelab/statevector.h"

namespace vqelab {

enum class NoiseMode {
  kNone,
  // Every site independently faulted with probability p.
  kPerGateRate,
  // With probability r the execution carries exactly one fault at a uniform
  // site with a uniform Pauli; otherwise none.
  kErroneousRatio,
};

std::string_view NoiseModeName(NoiseMode mode);
std::optional<NoiseMode> NoiseModeFromName(std::string_view name);

struct NoiseConfig {
  NoiseMode mode = NoiseMode::kNone;
  double probability = 0.0;  // p or r, depending on mode
  // Extends the fault sites of a measurement circuit to its basis-rotation
  // gates; by default only the ansatz portion can be struck.
  bool include_basis_rotations = false;

  static NoiseConfig None() { return {}; }
  static NoiseConfig PerGateRate(double p) {
    return {NoiseMode::kPerGateRate, p, false};
  }
  static NoiseConfig ErroneousRatio(double r) {
    return {NoiseMode::kErroneousRatio, r, false};
  }

  // Throws ErrorCode::kConfig unless probability is in [0, 1].
  void Validate() const;
  // True when no fault can ever be drawn.
  bool IsSilent() const {
    return mode == NoiseMode::kNone || probability <= 0.0;
  }

  friend bool operator==(const NoiseConfig&, const NoiseConfig&) = default;
};

struct FaultSite {
  FaultLocation location;
  Pauli pauli = Pauli::kX;  // one of X, Y, Z

  friend bool operator==(const FaultSite&, const FaultSite&) = default;
};

inline constexpr Pauli kFaultPaulis[3] = {Pauli::kX, Pauli::kY, Pauli::kZ};

// Draws the faults of one circuit execution. Silent configurations consume
// no random numbers.
std::vector<FaultSite> SampleFaults(std::span<const FaultLocation> sites,
                                    const NoiseConfig& config, Rng& rng);
std::vector<FaultSite> SampleFaults(const Circuit& circuit,
                                    const NoiseConfig& config, Rng& rng);

// Execute() with each fault's Pauli applied at its location. Faults sharing
// a location are applied in list order.
StateVector ExecuteWithFaults(const Circuit& circuit,
                              std::span<const double> theta,
                              std::span<const FaultSite> faults);

struct FidelityEntry {
  FaultLocation location;
  Pauli pauli = Pauli::kX;
  double fidelity = 1.0;
};

// One entry per (site, Pauli), sites in FaultSites() order and Paulis in
// X, Y, Z order.
using FidelityMap = std::vector<FidelityEntry>;

// Fidelity between the fault-free output and the output with a single fault.
// Since the fault-free suffix cancels, |<ideal|faulty>|^2 equals
// <chi|P_q|chi>^2 for the fault-free state chi at the site, so one forward
// pass serves every entry.
FidelityMap ExhaustiveFaultSweep(const Circuit& circuit,
                                 std::span<const double> theta,
                                 FaultSiteOptions options = {});

// Same map by re-executing the circuit once per entry. Quadratic in the
// gate count; used to cross-check the forward-pass sweep.
FidelityMap ExhaustiveFaultSweepByReexecution(const Circuit& circuit,
                                              std::span<const double> theta,
                                              FaultSiteOptions options = {});

double MeanFidelity(const FidelityMap& map);

// Mean of the exhaustive sweep over n_param_draws parameter vectors, each
// slot uniform on [0, 2 pi). All vectors are drawn from rng up front in
// order, so the result does not depend on `threads`.
double AverageFidelity(const Circuit& circuit, int n_param_draws, Rng& rng,
                       int threads = 1, FaultSiteOptions options = {});

// Per-site error rate giving one fault per execution on average: 1 / sites.
// Throws ErrorCode::kUndefined for a circuit without sites.
double ErOneFault(const Circuit& circuit, FaultSiteOptions options = {});

// CSV with header "gate_index,qubit,pauli,fidelity". Preparation sites are
// written with gate_index -1 and measurement sites with the gate count.
void WriteFidelityCsv(std::ostream& out, const FidelityMap& map);

// Gate index as written in fidelity CSVs.
long long CsvGateIndex(const FaultLocation& location);

}  // namespace vqelab

#endif  // VQELAB_NOISE_H_
