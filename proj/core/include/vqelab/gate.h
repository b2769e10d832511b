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

#ifndef VQELAB_GATE_H_
#define VQELAB_GATE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "vqelab/pauli.h"

namespace vqelab {

// Gate conventions:
//   RY(t) = exp(-i t Y / 2),  RZ(t) = exp(-i t Z / 2),
//   H, X, Y, Z the usual matrices, CNOT(control, target) flips the target
//   when the control is |1>.
enum class GateKind { kRY, kRZ, kH, kCNOT, kX, kY, kZ };

std::string_view GateKindName(GateKind kind);
std::optional<GateKind> GateKindFromName(std::string_view name);

struct ParamSlot {
  std::size_t index = 0;
  friend bool operator==(ParamSlot, ParamSlot) = default;
};

// Rotation angle: absent (non-rotation gates), fixed radians, or a slot of
// the owning circuit's parameter vector.
using Angle = std::variant<std::monostate, double, ParamSlot>;

struct Gate {
  GateKind kind = GateKind::kX;
  int qubit = 0;    // the only qubit, or the CNOT control
  int target = -1;  // CNOT target; -1 for single-qubit gates
  Angle angle;

  static Gate RY(int q, Angle a) { return {GateKind::kRY, q, -1, a}; }
  static Gate RZ(int q, Angle a) { return {GateKind::kRZ, q, -1, a}; }
  static Gate H(int q) { return {GateKind::kH, q, -1, {}}; }
  static Gate X(int q) { return {GateKind::kX, q, -1, {}}; }
  static Gate Y(int q) { return {GateKind::kY, q, -1, {}}; }
  static Gate Z(int q) { return {GateKind::kZ, q, -1, {}}; }
  static Gate CNOT(int control, int target) {
    return {GateKind::kCNOT, control, target, {}};
  }
  static Gate PauliGate(Pauli p, int q);

  bool IsRotation() const {
    return kind == GateKind::kRY || kind == GateKind::kRZ;
  }
  bool IsTwoQubit() const { return kind == GateKind::kCNOT; }
  bool ActsOn(int q) const { return qubit == q || target == q; }
  // The qubit a fault after this gate strikes: the target of a CNOT, the
  // only qubit otherwise.
  int FaultQubit() const { return IsTwoQubit() ? target : qubit; }
  // True when the gate's action on qubit q commutes with Z_q (RZ, Z, and the
  // control side of a CNOT).
  bool IsDiagonalOn(int q) const;

  bool HasSlot() const { return std::holds_alternative<ParamSlot>(angle); }
  std::optional<double> FixedAngle() const;

  std::string ToString() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

}  // namespace vqelab

#endif  // VQELAB_GATE_H_
