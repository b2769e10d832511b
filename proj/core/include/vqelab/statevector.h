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

// Dense pure-state simulation kernel.
//
// Qubit q is bit q of the basis index: in the 2-qubit state |q0 q1>, the
// ket |10> (qubit 0 set) has index 1.

#ifndef VQELAB_STATEVECTOR_H_
#define VQELAB_STATEVECTOR_H_

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vqelab/gate.h"
#include "vqelab/pauli.h"

namespace vqelab {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;
inline constexpr double kNormTolerance = 1e-10;

// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

class StateVector {
 public:
  // |0...0>. Throws ErrorCode::kCapacity unless 1 <= n_qubits <= 24.
  static StateVector Zero(int n_qubits);
  // Computational basis state |index>.
  static StateVector Basis(int n_qubits, std::uint64_t index);
  // Validates length 2^n and unit norm within kNormTolerance.
  static StateVector FromAmplitudes(std::vector<Amplitude> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double NormSquared() const;

  // In-place kernels. Qubit indices are checked (ErrorCode::kIndex).
  void ApplyMatrix(int q, const Matrix2& m);
  void ApplyRY(int q, double theta);
  void ApplyRZ(int q, double theta);
  void ApplyH(int q);
  void ApplyX(int q);
  void ApplyY(int q);
  void ApplyZ(int q);
  void ApplyCNOT(int control, int target);
  void ApplyPauli(Pauli p, int q);
  // Requires a bound angle for rotations (ErrorCode::kUnboundParameter).
  void Apply(const Gate& gate);
  // Resolves parameter slots against theta.
  void Apply(const Gate& gate, std::span<const double> theta);

 private:
  StateVector(int n_qubits, std::vector<Amplitude> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}
  void CheckQubit(int q) const;

  int n_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

// Value-returning form of StateVector::Apply.
StateVector ApplyGate(StateVector state, const Gate& gate);

std::complex<double> InnerProduct(const StateVector& a, const StateVector& b);

// |<a|b>|^2. Throws ErrorCode::kDimension on qubit-count mismatch.
double Fidelity(const StateVector& a, const StateVector& b);

// sum_k |a_k|^2 (-1)^popcount(k & z_mask).
double ExpectationZString(const StateVector& state, std::uint64_t z_mask);

// <psi|P|psi> for one word, computed directly from the amplitudes.
double PauliExpectation(const StateVector& state, const PauliString& word);

// <psi|H|psi> without measurement circuits.
double DirectExpectation(const StateVector& state, const PauliSum& h);

// Single-qubit Bloch components <X_q>, <Y_q>, <Z_q>.
std::array<double, 3> BlochVector(const StateVector& state, int q);

}  // namespace vqelab

#endif  // VQELAB_STATEVECTOR_H_
