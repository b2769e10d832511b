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

#include "vqelab/pauli.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "vqelab/error.h"

namespace vqelab {

char PauliChar(Pauli p) {
  switch (p) {
    case Pauli::kI: return 'I';
    case Pauli::kX: return 'X';
    case Pauli::kY: return 'Y';
    case Pauli::kZ: return 'Z';
  }
  return '?';
}

std::optional<Pauli> PauliFromChar(char c) {
  switch (c) {
    case 'I': return Pauli::kI;
    case 'X': return Pauli::kX;
    case 'Y': return Pauli::kY;
    case 'Z': return Pauli::kZ;
    default: return std::nullopt;
  }
}

PauliString::PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {}

PauliString PauliString::FromString(std::string_view word) {
  std::vector<Pauli> ops;
  ops.reserve(word.size());
  for (char c : word) {
    auto p = PauliFromChar(c);
    if (!p) {
      throw Error(ErrorCode::kParse,
                  std::string("illegal Pauli character '") + c + "' in '" +
                      std::string(word) + "'");
    }
    ops.push_back(*p);
  }
  return PauliString(std::move(ops));
}

PauliString PauliString::Identity(int n_qubits) {
  return PauliString(std::vector<Pauli>(n_qubits, Pauli::kI));
}

bool PauliString::IsIdentity() const {
  for (Pauli p : ops_) {
    if (p != Pauli::kI) return false;
  }
  return true;
}

std::uint64_t PauliString::XMask() const {
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < ops_.size(); ++q) {
    if (ops_[q] == Pauli::kX || ops_[q] == Pauli::kY) m |= 1ULL << q;
  }
  return m;
}

std::uint64_t PauliString::ZMask() const {
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < ops_.size(); ++q) {
    if (ops_[q] == Pauli::kZ || ops_[q] == Pauli::kY) m |= 1ULL << q;
  }
  return m;
}

std::uint64_t PauliString::Support() const { return XMask() | ZMask(); }

int PauliString::YCount() const {
  int n = 0;
  for (Pauli p : ops_) n += (p == Pauli::kY);
  return n;
}

bool PauliString::QubitWiseCommutes(const PauliString& other) const {
  if (other.n_qubits() != n_qubits()) return false;
  for (std::size_t q = 0; q < ops_.size(); ++q) {
    const Pauli a = ops_[q];
    const Pauli b = other.ops_[q];
    if (a != Pauli::kI && b != Pauli::kI && a != b) return false;
  }
  return true;
}

std::string PauliString::ToString() const {
  std::string s;
  s.reserve(ops_.size());
  for (Pauli p : ops_) s.push_back(PauliChar(p));
  return s;
}

void PauliSum::Add(double coefficient, const PauliString& word) {
  if (terms_.empty() && n_qubits_ == 0) n_qubits_ = word.n_qubits();
  if (word.n_qubits() != n_qubits_) {
    throw Error(ErrorCode::kDimension,
                "word '" + word.ToString() + "' has " +
                    std::to_string(word.n_qubits()) + " qubits, expected " +
                    std::to_string(n_qubits_));
  }
  for (PauliTerm& t : terms_) {
    if (t.word == word) {
      t.coefficient += coefficient;
      return;
    }
  }
  terms_.push_back({coefficient, word});
}

void PauliSum::Add(double coefficient, std::string_view word) {
  Add(coefficient, PauliString::FromString(word));
}

double PauliSum::IdentityCoefficient() const {
  for (const PauliTerm& t : terms_) {
    if (t.word.IsIdentity()) return t.coefficient;
  }
  return 0.0;
}

std::size_t PauliSum::NonIdentityCount() const {
  std::size_t n = 0;
  for (const PauliTerm& t : terms_) n += !t.word.IsIdentity();
  return n;
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

PauliSum ParseHamiltonian(std::istream& in) {
  PauliSum sum;
  std::string raw;
  std::size_t line_no = 0;
  int width = -1;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto split = line.find_first_of(" \t");
    if (split == std::string_view::npos) {
      throw ParseError(line_no, "expected '<coefficient> <pauli word>'");
    }
    const std::string_view coeff_text = line.substr(0, split);
    const std::string_view word_text = Trim(line.substr(split));
    if (word_text.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError(line_no, "trailing fields after Pauli word");
    }

    double coeff = 0.0;
    const char* first = coeff_text.data();
    const char* last = first + coeff_text.size();
    // from_chars rejects a leading '+', which the format allows.
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, coeff);
    if (ec != std::errc() || ptr != last || !std::isfinite(coeff)) {
      throw ParseError(line_no, "malformed coefficient '" +
                                    std::string(coeff_text) + "'");
    }

    for (char c : word_text) {
      if (!PauliFromChar(c)) {
        throw ParseError(line_no, std::string("illegal character '") + c +
                                      "' in Pauli word");
      }
    }
    if (word_text.empty()) throw ParseError(line_no, "empty Pauli word");
    const int n = static_cast<int>(word_text.size());
    if (width < 0) {
      width = n;
      sum = PauliSum(n);
    } else if (n != width) {
      throw ParseError(line_no, "Pauli word length " + std::to_string(n) +
                                    " differs from " + std::to_string(width));
    }
    sum.Add(coeff, PauliString::FromString(word_text));
  }
  return sum;
}

PauliSum ParseHamiltonian(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseHamiltonian(in);
}

PauliSum LoadHamiltonian(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kData,
                "cannot open Hamiltonian file '" + path.string() + "'");
  }
  PauliSum h = ParseHamiltonian(in);
  if (h.empty()) {
    throw Error(ErrorCode::kData,
                "Hamiltonian file '" + path.string() + "' has no terms");
  }
  return h;
}

std::string FormatHamiltonian(const PauliSum& h) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (const PauliTerm& t : h.terms()) {
    out << t.coefficient << ' ' << t.word.ToString() << '\n';
  }
  return out.str();
}

}  // namespace vqelab
