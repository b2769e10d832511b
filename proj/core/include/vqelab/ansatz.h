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

#ifndef VQELAB_ANSATZ_H_
#define VQELAB_ANSATZ_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "vqelab/circuit.h"

namespace vqelab {

enum class Entanglement {
  kFullPairwise,  // CNOT(i, j) for every i < j, lexicographic
  kLinearChain,   // CNOT(i, i + 1)
};

std::string_view EntanglementName(Entanglement e);
std::optional<Entanglement> EntanglementFromName(std::string_view name);

struct AnsatzSpec {
  int n_qubits = 2;
  int layers = 1;
  Entanglement entanglement = Entanglement::kFullPairwise;

  friend bool operator==(const AnsatzSpec&, const AnsatzSpec&) = default;
};

// Throws ErrorCode::kSpec for n_qubits < 1, layers < 0, or layers >= 1 with
// fewer than two qubits.
void ValidateAnsatzSpec(const AnsatzSpec& spec);

// RYRZ hardware-efficient ansatz: a column of RY then RZ on every qubit,
// followed per layer by the entangling CNOT block and another RY, RZ
// column. Slots are numbered in gate order, so n_params = 2 n (layers + 1).
Circuit BuildRyrz(const AnsatzSpec& spec);

std::size_t RyrzParameterCount(const AnsatzSpec& spec);
std::size_t RyrzGateCount(const AnsatzSpec& spec);

}  // namespace vqelab

#endif  // VQELAB_ANSATZ_H_
