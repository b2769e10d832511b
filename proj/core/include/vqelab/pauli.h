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

// Pauli words and real-weighted Pauli sums, plus the text format used for
// the shipped molecular Hamiltonians.
//
// Character k of a written word acts on qubit k, and qubit k is bit k of a
// basis-state index. "ZI" is therefore Z on qubit 0.

#ifndef VQELAB_PAULI_H_
#define VQELAB_PAULI_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vqelab {

enum class Pauli : std::uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

char PauliChar(Pauli p);
std::optional<Pauli> PauliFromChar(char c);

class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> ops);

  // Throws ErrorCode::kParse on characters outside {I, X, Y, Z}.
  static PauliString FromString(std::string_view word);
  static PauliString Identity(int n_qubits);

  int n_qubits() const { return static_cast<int>(ops_.size()); }
  Pauli operator[](int qubit) const { return ops_[qubit]; }
  const std::vector<Pauli>& ops() const { return ops_; }

  bool IsIdentity() const;
  // Bit q set where the word has X or Y on qubit q.
  std::uint64_t XMask() const;
  // Bit q set where the word has Z or Y on qubit q.
  std::uint64_t ZMask() const;
  // Bit q set where the word is not I.
  std::uint64_t Support() const;
  int YCount() const;

  // True when the two words agree or one has I at every qubit.
  bool QubitWiseCommutes(const PauliString& other) const;

  std::string ToString() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> ops_;
};

struct PauliTerm {
  double coefficient = 0.0;  // Hartree
  PauliString word;
};

// H = sum_k c_k P_k with real c_k, so H is hermitian by construction.
// Words are unique; Add() merges repeated words by adding coefficients.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Throws ErrorCode::kDimension when the word width differs from the sum's.
  void Add(double coefficient, const PauliString& word);
  void Add(double coefficient, std::string_view word);

  double IdentityCoefficient() const;
  std::size_t NonIdentityCount() const;

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

// Parses the Hamiltonian text format: '#' starts a comment line; every other
// non-blank line is "<decimal coefficient> <whitespace> <word>". All words
// must have the same length. Errors are ParseError with the line number.
PauliSum ParseHamiltonian(std::istream& in);
PauliSum ParseHamiltonian(std::string_view text);

// Throws ErrorCode::kData naming the path when the file cannot be opened.
PauliSum LoadHamiltonian(const std::filesystem::path& path);

std::string FormatHamiltonian(const PauliSum& h);

}  // namespace vqelab

#endif  // VQELAB_PAULI_H_
