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

#include "vqelab/statevector.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "vqelab/error.h"

namespace vqelab {

namespace {

constexpr Amplitude kI{0.0, 1.0};

std::string QubitCountMessage(int n) {
  return "qubit count " + std::to_string(n) + " outside [1, " +
         std::to_string(kMaxQubits) + "]";
}

void CheckSameDimension(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw Error(ErrorCode::kDimension,
                "states have " + std::to_string(a.n_qubits()) + " and " +
                    std::to_string(b.n_qubits()) + " qubits");
  }
}

}  // namespace

StateVector StateVector::Zero(int n_qubits) {
  return Basis(n_qubits, 0);
}

StateVector StateVector::Basis(int n_qubits, std::uint64_t index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw Error(ErrorCode::kCapacity, QubitCountMessage(n_qubits));
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) {
    throw Error(ErrorCode::kIndex, "basis index out of range");
  }
  std::vector<Amplitude> amps(dim);
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::FromAmplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw Error(ErrorCode::kDimension,
                "amplitude count " + std::to_string(dim) +
                    " is not a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  if (n > kMaxQubits) throw Error(ErrorCode::kCapacity, QubitCountMessage(n));
  StateVector s(n, std::move(amplitudes));
  if (std::abs(s.NormSquared() - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kNumeric, "amplitudes are not normalized");
  }
  return s;
}

double StateVector::NormSquared() const {
  double acc = 0.0;
  for (const Amplitude& a : amps_) acc += std::norm(a);
  return acc;
}

void StateVector::CheckQubit(int q) const {
  if (q < 0 || q >= n_qubits_) {
    throw Error(ErrorCode::kIndex, "qubit " + std::to_string(q) +
                                       " out of range for " +
                                       std::to_string(n_qubits_) + " qubits");
  }
}

void StateVector::ApplyMatrix(int q, const Matrix2& m) {
  CheckQubit(q);
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
    for (std::size_t i = hi; i < hi + bit; ++i) {
      const Amplitude a0 = amps_[i];
      const Amplitude a1 = amps_[i + bit];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i + bit] = m[2] * a0 + m[3] * a1;
    }
  }
}

void StateVector::ApplyRY(int q, double theta) {
  CheckQubit(q);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
    for (std::size_t i = hi; i < hi + bit; ++i) {
      const Amplitude a0 = amps_[i];
      const Amplitude a1 = amps_[i + bit];
      amps_[i] = c * a0 - s * a1;
      amps_[i + bit] = s * a0 + c * a1;
    }
  }
}

void StateVector::ApplyRZ(int q, double theta) {
  CheckQubit(q);
  const Amplitude p0 = std::polar(1.0, -0.5 * theta);
  const Amplitude p1 = std::polar(1.0, 0.5 * theta);
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    amps_[i] *= (i & bit) ? p1 : p0;
  }
}

void StateVector::ApplyH(int q) {
  constexpr double r = std::numbers::sqrt2 / 2.0;
  ApplyMatrix(q, {r, r, r, -r});
}

void StateVector::ApplyX(int q) {
  CheckQubit(q);
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
  }
}

void StateVector::ApplyY(int q) {
  CheckQubit(q);
  // Y|0> = i|1>, Y|1> = -i|0>.
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | bit];
    amps_[i] = -kI * a1;
    amps_[i | bit] = kI * a0;
  }
}

void StateVector::ApplyZ(int q) {
  CheckQubit(q);
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) amps_[i] = -amps_[i];
  }
}

void StateVector::ApplyCNOT(int control, int target) {
  CheckQubit(control);
  CheckQubit(target);
  if (control == target) {
    throw Error(ErrorCode::kIndex, "CNOT control equals target");
  }
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

void StateVector::ApplyPauli(Pauli p, int q) {
  switch (p) {
    case Pauli::kI: CheckQubit(q); return;
    case Pauli::kX: ApplyX(q); return;
    case Pauli::kY: ApplyY(q); return;
    case Pauli::kZ: ApplyZ(q); return;
  }
}

void StateVector::Apply(const Gate& gate) { Apply(gate, {}); }

void StateVector::Apply(const Gate& gate, std::span<const double> theta) {
  double angle = 0.0;
  if (gate.IsRotation()) {
    if (const double* a = std::get_if<double>(&gate.angle)) {
      angle = *a;
    } else if (const ParamSlot* s = std::get_if<ParamSlot>(&gate.angle)) {
      if (s->index >= theta.size()) {
        throw Error(ErrorCode::kUnboundParameter,
                    "gate '" + gate.ToString() + "' references unbound slot");
      }
      angle = theta[s->index];
    } else {
      throw Error(ErrorCode::kUnboundParameter,
                  "rotation gate '" + gate.ToString() + "' has no angle");
    }
  }
  switch (gate.kind) {
    case GateKind::kRY: ApplyRY(gate.qubit, angle); break;
    case GateKind::kRZ: ApplyRZ(gate.qubit, angle); break;
    case GateKind::kH: ApplyH(gate.qubit); break;
    case GateKind::kX: ApplyX(gate.qubit); break;
    case GateKind::kY: ApplyY(gate.qubit); break;
    case GateKind::kZ: ApplyZ(gate.qubit); break;
    case GateKind::kCNOT: ApplyCNOT(gate.qubit, gate.target); break;
  }
}

StateVector ApplyGate(StateVector state, const Gate& gate) {
  state.Apply(gate);
  return state;
}

std::complex<double> InnerProduct(const StateVector& a,
                                  const StateVector& b) {
  CheckSameDimension(a, b);
  Amplitude acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double Fidelity(const StateVector& a, const StateVector& b) {
  const double f = std::norm(InnerProduct(a, b));
  return f > 1.0 ? 1.0 : f;
}

double ExpectationZString(const StateVector& state, std::uint64_t z_mask) {
  if (state.n_qubits() < 64 && (z_mask >> state.n_qubits()) != 0) {
    throw Error(ErrorCode::kDimension, "Z mask wider than the state");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < state.dim(); ++k) {
    const double p = std::norm(state[k]);
    acc += (std::popcount(k & z_mask) & 1) ? -p : p;
  }
  return acc;
}

double PauliExpectation(const StateVector& state, const PauliString& word) {
  if (word.n_qubits() != state.n_qubits()) {
    throw Error(ErrorCode::kDimension,
                "word '" + word.ToString() + "' does not match a " +
                    std::to_string(state.n_qubits()) + "-qubit state");
  }
  // P|k> = i^{#Y} (-1)^{popcount(k & z)} |k ^ x>.
  const std::uint64_t x = word.XMask();
  const std::uint64_t z = word.ZMask();
  Amplitude acc = 0.0;
  for (std::size_t k = 0; k < state.dim(); ++k) {
    const Amplitude term = std::conj(state[k ^ x]) * state[k];
    acc += (std::popcount(k & z) & 1) ? -term : term;
  }
  static constexpr std::array<Amplitude, 4> kPhase = {
      Amplitude{1, 0}, Amplitude{0, 1}, Amplitude{-1, 0}, Amplitude{0, -1}};
  acc *= kPhase[word.YCount() & 3];
  return acc.real();
}

double DirectExpectation(const StateVector& state, const PauliSum& h) {
  if (h.n_qubits() != state.n_qubits()) {
    throw Error(ErrorCode::kDimension,
                "operator has " + std::to_string(h.n_qubits()) +
                    " qubits, state has " + std::to_string(state.n_qubits()));
  }
  double acc = 0.0;
  for (const PauliTerm& t : h.terms()) {
    acc += t.coefficient * PauliExpectation(state, t.word);
  }
  return acc;
}

std::array<double, 3> BlochVector(const StateVector& state, int q) {
  if (q < 0 || q >= state.n_qubits()) {
    throw Error(ErrorCode::kIndex, "qubit " + std::to_string(q) +
                                       " out of range");
  }
  const std::size_t bit = std::size_t{1} << q;
  double p0 = 0.0;
  double p1 = 0.0;
  Amplitude w = 0.0;  // sum conj(a_k0) a_k1
  for (std::size_t k = 0; k < state.dim(); ++k) {
    if (k & bit) {
      p1 += std::norm(state[k]);
    } else {
      p0 += std::norm(state[k]);
      w += std::conj(state[k]) * state[k | bit];
    }
  }
  return {2.0 * w.real(), 2.0 * w.imag(), p0 - p1};
}

}  // namespace vqelab
