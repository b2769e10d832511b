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

#include "vqelab/circuit.h"

#include <algorithm>
#include <sstream>

#include "vqelab/error.h"

namespace vqelab {

namespace {

void CheckGate(const Gate& g, int n_qubits, std::size_t n_params) {
  auto in_range = [n_qubits](int q) { return q >= 0 && q < n_qubits; };
  if (!in_range(g.qubit)) {
    throw Error(ErrorCode::kIndex, "gate '" + g.ToString() +
                                       "' qubit out of range for " +
                                       std::to_string(n_qubits) + " qubits");
  }
  if (g.IsTwoQubit()) {
    if (!in_range(g.target)) {
      throw Error(ErrorCode::kIndex,
                  "gate '" + g.ToString() + "' target out of range");
    }
    if (g.target == g.qubit) {
      throw Error(ErrorCode::kSpec,
                  "CNOT needs two distinct qubits: '" + g.ToString() + "'");
    }
  } else if (g.target != -1) {
    throw Error(ErrorCode::kSpec,
                "single-qubit gate with a target: '" + g.ToString() + "'");
  }
  if (g.IsRotation()) {
    if (std::holds_alternative<std::monostate>(g.angle)) {
      throw Error(ErrorCode::kUnboundParameter,
                  "rotation without angle: '" + g.ToString() + "'");
    }
    if (const ParamSlot* s = std::get_if<ParamSlot>(&g.angle)) {
      if (s->index >= n_params) {
        throw Error(ErrorCode::kIndex, "slot $" + std::to_string(s->index) +
                                           " >= parameter count " +
                                           std::to_string(n_params));
      }
    }
  } else if (!std::holds_alternative<std::monostate>(g.angle)) {
    throw Error(ErrorCode::kSpec,
                "non-rotation gate with an angle: '" + g.ToString() + "'");
  }
}

}  // namespace

Circuit::Circuit(int n_qubits, std::size_t n_params, std::vector<Gate> gates)
    : n_qubits_(n_qubits), n_params_(n_params), gates_(std::move(gates)) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw Error(ErrorCode::kCapacity,
                "circuit qubit count " + std::to_string(n_qubits));
  }
  std::vector<bool> used(n_params, false);
  for (const Gate& g : gates_) {
    CheckGate(g, n_qubits, n_params);
    if (const ParamSlot* s = std::get_if<ParamSlot>(&g.angle)) {
      used[s->index] = true;
    }
  }
  const auto unused = std::find(used.begin(), used.end(), false);
  if (unused != used.end()) {
    throw Error(ErrorCode::kSpec,
                "parameter slot $" +
                    std::to_string(unused - used.begin()) +
                    " is not referenced by any gate");
  }
}

Circuit Circuit::Append(std::span<const Gate> tail) const {
  std::vector<Gate> gates = gates_;
  gates.insert(gates.end(), tail.begin(), tail.end());
  return Circuit(n_qubits_, n_params_, std::move(gates));
}

Circuit Bind(const Circuit& circuit, std::span<const double> theta) {
  if (theta.size() != circuit.n_params()) {
    throw Error(ErrorCode::kArity,
                "got " + std::to_string(theta.size()) +
                    " parameters for " + std::to_string(circuit.n_params()) +
                    " slots");
  }
  std::vector<Gate> gates = circuit.gates();
  for (Gate& g : gates) {
    if (const ParamSlot* s = std::get_if<ParamSlot>(&g.angle)) {
      g.angle = theta[s->index];
    }
  }
  return Circuit(circuit.n_qubits(), 0, std::move(gates));
}

StateVector Execute(const Circuit& circuit, std::span<const double> theta) {
  if (theta.size() != circuit.n_params()) {
    throw Error(ErrorCode::kArity,
                "got " + std::to_string(theta.size()) +
                    " parameters for " + std::to_string(circuit.n_params()) +
                    " slots");
  }
  StateVector state = StateVector::Zero(circuit.n_qubits());
  for (const Gate& g : circuit.gates()) state.Apply(g, theta);
  return state;
}

std::vector<FaultLocation> FaultSites(const Circuit& circuit,
                                      FaultSiteOptions options) {
  std::vector<FaultLocation> sites;
  sites.reserve(circuit.size() + 2 * circuit.n_qubits());
  if (options.include_preparation) {
    for (int q = 0; q < circuit.n_qubits(); ++q) {
      sites.push_back({SiteKind::kPreparation, 0, q});
    }
  }
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    sites.push_back(
        {SiteKind::kAfterGate, i, circuit.gates()[i].FaultQubit()});
  }
  if (options.include_measurement) {
    for (int q = 0; q < circuit.n_qubits(); ++q) {
      sites.push_back({SiteKind::kMeasurement, circuit.size(), q});
    }
  }
  return sites;
}

std::vector<std::size_t> ScheduleLayers(const Circuit& circuit) {
  std::vector<std::size_t> frontier(circuit.n_qubits(), 0);
  std::vector<std::size_t> layers;
  layers.reserve(circuit.size());
  for (const Gate& g : circuit.gates()) {
    std::size_t layer = frontier[g.qubit];
    if (g.IsTwoQubit()) layer = std::max(layer, frontier[g.target]);
    ++layer;
    frontier[g.qubit] = layer;
    if (g.IsTwoQubit()) frontier[g.target] = layer;
    layers.push_back(layer);
  }
  return layers;
}

std::size_t Depth(const Circuit& circuit) {
  const auto layers = ScheduleLayers(circuit);
  return layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
}

std::string DumpCircuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "circuit " << circuit.n_qubits() << ' ' << circuit.n_params() << ' '
      << circuit.size() << '\n';
  for (const Gate& g : circuit.gates()) out << g.ToString() << '\n';
  return out.str();
}

std::string_view SiteKindName(SiteKind kind) {
  switch (kind) {
    case SiteKind::kAfterGate: return "gate";
    case SiteKind::kPreparation: return "preparation";
    case SiteKind::kMeasurement: return "measurement";
  }
  return "?";
}

}  // namespace vqelab
