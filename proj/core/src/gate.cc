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

#include "vqelab/gate.h"

#include <sstream>

namespace vqelab {

std::string_view GateKindName(GateKind kind) {
  switch (kind) {
    case GateKind::kRY: return "RY";
    case GateKind::kRZ: return "RZ";
    case GateKind::kH: return "H";
    case GateKind::kCNOT: return "CNOT";
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
  }
  return "?";
}

std::optional<GateKind> GateKindFromName(std::string_view name) {
  for (GateKind k : {GateKind::kRY, GateKind::kRZ, GateKind::kH,
                     GateKind::kCNOT, GateKind::kX, GateKind::kY,
                     GateKind::kZ}) {
    if (GateKindName(k) == name) return k;
  }
  return std::nullopt;
}

Gate Gate::PauliGate(Pauli p, int q) {
  switch (p) {
    case Pauli::kX: return X(q);
    case Pauli::kY: return Y(q);
    case Pauli::kZ: return Z(q);
    case Pauli::kI: break;
  }
  return {GateKind::kZ, q, -1, {}};  // unreachable for valid faults
}

bool Gate::IsDiagonalOn(int q) const {
  if (!ActsOn(q)) return true;
  switch (kind) {
    case GateKind::kRZ:
    case GateKind::kZ:
      return true;
    case GateKind::kCNOT:
      return q == qubit;
    default:
      return false;
  }
}

std::optional<double> Gate::FixedAngle() const {
  if (const double* a = std::get_if<double>(&angle)) return *a;
  return std::nullopt;
}

std::string Gate::ToString() const {
  std::ostringstream out;
  out.precision(17);
  out << GateKindName(kind) << ' ' << qubit;
  if (IsTwoQubit()) out << ' ' << target;
  if (const double* a = std::get_if<double>(&angle)) {
    out << ' ' << *a;
  } else if (const ParamSlot* s = std::get_if<ParamSlot>(&angle)) {
    out << " $" << s->index;
  }
  return out.str();
}

}  // namespace vqelab
