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

// Dense reference solutions for small Pauli-sum operators.

#ifndef VQELAB_ORACLE_H_
#define VQELAB_ORACLE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "vqelab/pauli.h"
#include "vqelab/statevector.h"

namespace vqelab {

inline constexpr int kMaxDenseQubits = 12;

// Row-major 2^n x 2^n matrix.
class DenseOperator {
 public:
  explicit DenseOperator(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return dim_; }
  Amplitude& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  const Amplitude& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  const std::vector<Amplitude>& data() const { return data_; }

  double HermitianDefect() const;  // max |A_ij - conj(A_ji)|
  Amplitude Trace() const;
  std::vector<Amplitude> Multiply(std::span<const Amplitude> v) const;

 private:
  int n_qubits_;
  std::size_t dim_;
  std::vector<Amplitude> data_;
};

DenseOperator ToDense(const PauliSum& h);

struct GroundState {
  double energy = 0.0;  // Hartree
  StateVector state;
};

GroundState ExactMinEigenvalue(const PauliSum& h);

}  // namespace vqelab

#endif  // VQELAB_ORACLE_H_
