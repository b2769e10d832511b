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

#include "vqelab/oracle.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <string>

#include "vqelab/error.h"

namespace vqelab {

namespace {

void CheckDenseSize(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw Error(ErrorCode::kCapacity,
                "dense operator on " + std::to_string(n_qubits) +
                    " qubits (limit " + std::to_string(kMaxDenseQubits) + ")");
  }
}

}  // namespace

DenseOperator::DenseOperator(int n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << std::clamp(n_qubits, 0, 30)) {
  CheckDenseSize(n_qubits);
  data_.assign(dim_ * dim_, Amplitude(0.0, 0.0));
}

double DenseOperator::HermitianDefect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

Amplitude DenseOperator::Trace() const {
  Amplitude t(0.0, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<Amplitude> DenseOperator::Multiply(
    std::span<const Amplitude> v) const {
  if (v.size() != dim_) {
    throw Error(ErrorCode::kDimension, "operator/vector size mismatch");
  }
  std::vector<Amplitude> out(dim_, Amplitude(0.0, 0.0));
  for (std::size_t r = 0; r < dim_; ++r) {
    Amplitude acc(0.0, 0.0);
    for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

DenseOperator ToDense(const PauliSum& h) {
  DenseOperator op(h.n_qubits());
  static const Amplitude kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const PauliTerm& term : h.terms()) {
    const std::uint64_t x = term.word.XMask();
    const std::uint64_t z = term.word.ZMask();
    const Amplitude phase = kIPow[term.word.YCount() % 4] * term.coefficient;
    // P|k> = i^{#Y} (-1)^{popcount(k & z)} |k ^ x>
    for (std::size_t k = 0; k < op.dim(); ++k) {
      const double sign = (std::popcount(k & z) & 1) ? -1.0 : 1.0;
      op(k ^ x, k) += phase * sign;
    }
  }
  return op;
}

GroundState ExactMinEigenvalue(const PauliSum& h) {
  const DenseOperator op = ToDense(h);
  const auto dim = static_cast<Eigen::Index>(op.dim());
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = op(r, c);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumeric, "eigensolver did not converge");
  }
  std::vector<Amplitude> amps(op.dim());
  const auto v = solver.eigenvectors().col(0);
  double norm = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) norm += std::norm(v(i));
  norm = std::sqrt(norm);
  for (Eigen::Index i = 0; i < dim; ++i) amps[i] = v(i) / norm;
  return {solver.eigenvalues()(0), StateVector::FromAmplitudes(std::move(amps))};
}

}  // namespace vqelab
