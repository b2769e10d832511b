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

#ifndef VQELAB_CIRCUIT_H_
#define VQELAB_CIRCUIT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqelab/gate.h"
#include "vqelab/statevector.h"

namespace vqelab {

// Ordered gate list over n_qubits with n_params parameter slots. Immutable
// once constructed; the constructor enforces that every gate is well formed,
// every qubit index is in range and every slot in [0, n_params) is used.
class Circuit {
 public:
  Circuit() = default;
  Circuit(int n_qubits, std::size_t n_params, std::vector<Gate> gates);

  static Circuit Empty(int n_qubits) { return Circuit(n_qubits, 0, {}); }

  int n_qubits() const { return n_qubits_; }
  std::size_t n_params() const { return n_params_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  // This circuit followed by fixed (slot-free) gates.
  Circuit Append(std::span<const Gate> tail) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_qubits_ = 0;
  std::size_t n_params_ = 0;
  std::vector<Gate> gates_;
};

// Replaces every slot by its concrete angle. The result has no slots.
// Throws ErrorCode::kArity when theta.size() != n_params.
Circuit Bind(const Circuit& circuit, std::span<const double> theta);

// |0...0> followed by the gates in order.
StateVector Execute(const Circuit& circuit, std::span<const double> theta);

// Where a single Pauli fault may strike.
enum class SiteKind {
  kAfterGate,    // immediately after gates()[gate_index]
  kPreparation,  // on the initial |0>, before any gate
  kMeasurement,  // after the last gate, before readout
};

std::string_view SiteKindName(SiteKind kind);

struct FaultLocation {
  SiteKind kind = SiteKind::kAfterGate;
  std::size_t gate_index = 0;  // meaningful for kAfterGate only
  int qubit = 0;

  friend bool operator==(const FaultLocation&, const FaultLocation&) =
      default;
};

struct FaultSiteOptions {
  // One site per qubit before the first gate.
  bool include_preparation = false;
  // One site per qubit after the last gate.
  bool include_measurement = false;
};

// One site per gate instance in gate order, on Gate::FaultQubit(); the
// optional preparation sites come first and measurement sites last.
std::vector<FaultLocation> FaultSites(const Circuit& circuit,
                                      FaultSiteOptions options = {});

// 1-based layer of every gate under greedy as-soon-as-possible scheduling
// in list order.
std::vector<std::size_t> ScheduleLayers(const Circuit& circuit);
std::size_t Depth(const Circuit& circuit);

// Line-oriented text dump, one gate per line:
//   "<KIND> <qubit> [<target>] [<angle> | $<slot>]"
// preceded by a "circuit <n_qubits> <n_params> <n_gates>" header.
std::string DumpCircuit(const Circuit& circuit);

}  // namespace vqelab

#endif  // VQELAB_CIRCUIT_H_
