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

// Energy estimation through measurement circuits: the ansatz followed by
// basis rotations that turn each Pauli term into a Z-basis parity.

#ifndef VQELAB_ENERGY_H_
#define VQELAB_ENERGY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vqelab/circuit.h"
#include "vqelab/noise.h"
#include "vqelab/pauli.h"
#include "vqelab/rng.h"

namespace vqelab {

enum class Grouping {
  kPerTerm,    // one circuit per term, the identity term included
  kQubitWise,  // one circuit per greedy qubit-wise-commuting group
};

std::string_view GroupingName(Grouping g);
std::optional<Grouping> GroupingFromName(std::string_view name);

struct MeasurementCircuit {
  // Appended to the bound ansatz. X -> H; Y -> RZ(-pi/2) then H.
  std::vector<Gate> basis_rotations;
  // Union of the non-identity positions of the referenced terms.
  std::uint64_t z_mask = 0;
  // Indices into PauliSum::terms().
  std::vector<std::size_t> term_refs;
};

std::vector<Gate> BasisRotations(const PauliString& basis);

// Per-term mode yields exactly one circuit per term of h. The identity term
// gets a circuit with an empty mask, which always evaluates to +1.
// Qubit-wise mode places each term in the first group whose members all
// qubit-wise commute with it, creating a new group otherwise.
std::vector<MeasurementCircuit> MeasurementCircuits(
    const PauliSum& h, Grouping grouping = Grouping::kPerTerm);

struct EstimatorOptions {
  Grouping grouping = Grouping::kPerTerm;
  // 0 means exact expectations; otherwise each circuit is sampled this many
  // times and parities are averaged.
  std::size_t shots = 0;

  friend bool operator==(const EstimatorOptions&,
                         const EstimatorOptions&) = default;
};

struct FaultEvent {
  std::size_t circuit_id = 0;
  FaultSite site;

  friend bool operator==(const FaultEvent&, const FaultEvent&) = default;
};

struct EnergyResult {
  double energy = 0.0;  // Hartree
  std::vector<FaultEvent> faults;
  std::size_t circuits_executed = 0;

  bool erroneous() const { return !faults.empty(); }
};

// Caches the measurement circuits and fault-site lists for one
// (ansatz, Hamiltonian) pair. Evaluate() is const and thread-safe.
class EnergyEstimator {
 public:
  EnergyEstimator(Circuit ansatz, PauliSum h, EstimatorOptions options = {});

  const Circuit& ansatz() const { return ansatz_; }
  const PauliSum& hamiltonian() const { return h_; }
  const EstimatorOptions& options() const { return options_; }
  const std::vector<MeasurementCircuit>& circuits() const { return circuits_; }

  // Fault sites of measurement circuit `id`: the ansatz gates, plus the
  // basis-rotation gates when include_basis_rotations is set.
  std::span<const FaultLocation> Sites(std::size_t id,
                                       bool include_basis_rotations) const;

  // energy = sum over circuits and their terms of coefficient * parity
  // expectation on the executed (possibly faulted) state. Faults for every
  // circuit are drawn from rng first, in circuit order; shot sampling (if
  // enabled) draws afterwards, also in circuit order.
  EnergyResult Evaluate(std::span<const double> theta,
                        const NoiseConfig& noise, Rng& rng) const;

  // Direct <psi(theta)|H|psi(theta)> with no measurement circuits.
  double Exact(std::span<const double> theta) const;

 private:
  Circuit ansatz_;
  PauliSum h_;
  EstimatorOptions options_;
  std::vector<MeasurementCircuit> circuits_;
  std::vector<Circuit> full_circuits_;
  std::vector<std::vector<FaultLocation>> all_sites_;
  std::size_t ansatz_site_count_ = 0;
  std::vector<std::uint64_t> term_masks_;
};

EnergyResult EvalEnergy(const Circuit& ansatz, std::span<const double> theta,
                        const PauliSum& h, const NoiseConfig& noise, Rng& rng,
                        EstimatorOptions options = {});

}  // namespace vqelab

#endif  // VQELAB_ENERGY_H_
