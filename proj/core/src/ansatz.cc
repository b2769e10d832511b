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

#include "vqelab/ansatz.h"

#include <string>
#include <vector>

#include "vqelab/error.h"

namespace vqelab {

std::string_view EntanglementName(Entanglement e) {
  return e == Entanglement::kFullPairwise ? "full" : "linear";
}

std::optional<Entanglement> EntanglementFromName(std::string_view name) {
  if (name == "full") return Entanglement::kFullPairwise;
  if (name == "linear") return Entanglement::kLinearChain;
  return std::nullopt;
}

void ValidateAnsatzSpec(const AnsatzSpec& spec) {
  if (spec.n_qubits < 1 || spec.n_qubits > kMaxQubits) {
    throw Error(ErrorCode::kSpec,
                "ansatz qubit count " + std::to_string(spec.n_qubits));
  }
  if (spec.layers < 0) {
    throw Error(ErrorCode::kSpec,
                "negative layer count " + std::to_string(spec.layers));
  }
  if (spec.layers >= 1 && spec.n_qubits < 2) {
    throw Error(ErrorCode::kSpec, "entangling layers need at least 2 qubits");
  }
}

std::size_t RyrzParameterCount(const AnsatzSpec& spec) {
  return 2 * static_cast<std::size_t>(spec.n_qubits) * (spec.layers + 1);
}

std::size_t RyrzGateCount(const AnsatzSpec& spec) {
  const std::size_t n = spec.n_qubits;
  const std::size_t per_block =
      spec.entanglement == Entanglement::kFullPairwise ? n * (n - 1) / 2
                                                       : n - 1;
  return RyrzParameterCount(spec) + spec.layers * per_block;
}

Circuit BuildRyrz(const AnsatzSpec& spec) {
  ValidateAnsatzSpec(spec);
  const int n = spec.n_qubits;
  std::vector<Gate> gates;
  gates.reserve(RyrzGateCount(spec));
  std::size_t slot = 0;

  auto rotation_column = [&] {
    for (int q = 0; q < n; ++q) {
      gates.push_back(Gate::RY(q, ParamSlot{slot++}));
      gates.push_back(Gate::RZ(q, ParamSlot{slot++}));
    }
  };

  rotation_column();
  for (int layer = 0; layer < spec.layers; ++layer) {
    if (spec.entanglement == Entanglement::kFullPairwise) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) gates.push_back(Gate::CNOT(i, j));
      }
    } else {
      for (int i = 0; i + 1 < n; ++i) gates.push_back(Gate::CNOT(i, i + 1));
    }
    rotation_column();
  }
  return Circuit(n, slot, std::move(gates));
}

}  // namespace vqelab
