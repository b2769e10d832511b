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

#include "vqelab/energy.h"

#include <algorithm>
#include <bit>
#include <numbers>
#include <string>

#include "vqelab/error.h"

namespace vqelab {

std::string_view GroupingName(Grouping g) {
  return g == Grouping::kPerTerm ? "per_term" : "qubit_wise";
}

std::optional<Grouping> GroupingFromName(std::string_view name) {
  if (name == "per_term") return Grouping::kPerTerm;
  if (name == "qubit_wise") return Grouping::kQubitWise;
  return std::nullopt;
}

std::vector<Gate> BasisRotations(const PauliString& basis) {
  std::vector<Gate> gates;
  for (int q = 0; q < basis.n_qubits(); ++q) {
    switch (basis[q]) {
      case Pauli::kX:
        gates.push_back(Gate::H(q));
        break;
      case Pauli::kY:
        gates.push_back(Gate::RZ(q, -std::numbers::pi / 2));
        gates.push_back(Gate::H(q));
        break;
      case Pauli::kI:
      case Pauli::kZ:
        break;
    }
  }
  return gates;
}

std::vector<MeasurementCircuit> MeasurementCircuits(const PauliSum& h,
                                                    Grouping grouping) {
  const auto& terms = h.terms();
  std::vector<MeasurementCircuit> out;
  if (grouping == Grouping::kPerTerm) {
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out.push_back({BasisRotations(terms[i].word), terms[i].word.Support(),
                     {i}});
    }
    return out;
  }

  // Each group keeps a merged basis word: the non-identity Pauli of any
  // member at every position.
  std::vector<std::vector<Pauli>> bases;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const PauliString& w = terms[i].word;
    bool placed = false;
    for (std::size_t g = 0; g < bases.size() && !placed; ++g) {
      if (!PauliString(bases[g]).QubitWiseCommutes(w)) continue;
      for (int q = 0; q < w.n_qubits(); ++q) {
        if (w[q] != Pauli::kI) bases[g][q] = w[q];
      }
      members[g].push_back(i);
      placed = true;
    }
    if (!placed) {
      bases.push_back(w.ops());
      members.push_back({i});
    }
  }
  for (std::size_t g = 0; g < bases.size(); ++g) {
    const PauliString basis(bases[g]);
    out.push_back({BasisRotations(basis), basis.Support(), members[g]});
  }
  return out;
}

EnergyEstimator::EnergyEstimator(Circuit ansatz, PauliSum h,
                                 EstimatorOptions options)
    : ansatz_(std::move(ansatz)), h_(std::move(h)), options_(options) {
  if (h_.empty()) {
    throw Error(ErrorCode::kSpec, "Hamiltonian has no terms");
  }
  if (h_.n_qubits() != ansatz_.n_qubits()) {
    throw Error(ErrorCode::kDimension,
                "Hamiltonian has " + std::to_string(h_.n_qubits()) +
                    " qubits, ansatz has " +
                    std::to_string(ansatz_.n_qubits()));
  }
  circuits_ = MeasurementCircuits(h_, options_.grouping);
  ansatz_site_count_ = ansatz_.size();
  for (const MeasurementCircuit& mc : circuits_) {
    full_circuits_.push_back(ansatz_.Append(mc.basis_rotations));
    all_sites_.push_back(FaultSites(full_circuits_.back()));
  }
  for (const PauliTerm& t : h_.terms()) term_masks_.push_back(t.word.Support());
}

std::span<const FaultLocation> EnergyEstimator::Sites(
    std::size_t id, bool include_basis_rotations) const {
  std::span<const FaultLocation> all = all_sites_.at(id);
  return include_basis_rotations ? all : all.first(ansatz_site_count_);
}

double EnergyEstimator::Exact(std::span<const double> theta) const {
  return DirectExpectation(Execute(ansatz_, theta), h_);
}

namespace {

// Parity estimate from `shots` samples of the computational-basis
// distribution; samples are shared across the masks of one circuit.
std::vector<double> SampledParities(const StateVector& state,
                                    std::span<const std::uint64_t> masks,
                                    std::size_t shots, Rng& rng) {
  std::vector<double> cdf(state.dim());
  double acc = 0.0;
  for (std::size_t k = 0; k < state.dim(); ++k) {
    acc += std::norm(state[k]);
    cdf[k] = acc;
  }
  std::vector<long long> sums(masks.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.Uniform01() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t k = std::min<std::size_t>(it - cdf.begin(),
                                                 state.dim() - 1);
    for (std::size_t m = 0; m < masks.size(); ++m) {
      sums[m] += (std::popcount(k & masks[m]) & 1) ? -1 : 1;
    }
  }
  std::vector<double> out(masks.size());
  for (std::size_t m = 0; m < masks.size(); ++m) {
    out[m] = static_cast<double>(sums[m]) / static_cast<double>(shots);
  }
  return out;
}

}  // namespace

EnergyResult EnergyEstimator::Evaluate(std::span<const double> theta,
                                       const NoiseConfig& noise,
                                       Rng& rng) const {
  noise.Validate();
  if (theta.size() != ansatz_.n_params()) {
    throw Error(ErrorCode::kArity,
                "got " + std::to_string(theta.size()) +
                    " parameters for " + std::to_string(ansatz_.n_params()) +
                    " slots");
  }
  EnergyResult result;
  std::vector<std::vector<FaultSite>> faults(circuits_.size());
  for (std::size_t id = 0; id < circuits_.size(); ++id) {
    faults[id] =
        SampleFaults(Sites(id, noise.include_basis_rotations), noise, rng);
    for (const FaultSite& f : faults[id]) result.faults.push_back({id, f});
  }

  const StateVector clean = Execute(ansatz_, theta);
  double energy = 0.0;
  for (std::size_t id = 0; id < circuits_.size(); ++id) {
    const MeasurementCircuit& mc = circuits_[id];
    ++result.circuits_executed;
    std::vector<std::uint64_t> masks;
    masks.reserve(mc.term_refs.size());
    for (std::size_t t : mc.term_refs) masks.push_back(term_masks_[t]);

    std::vector<double> parities(masks.size(), 1.0);
    if (mc.z_mask != 0) {
      StateVector state = clean;
      if (faults[id].empty()) {
        for (const Gate& g : mc.basis_rotations) state.Apply(g);
      } else {
        state = ExecuteWithFaults(full_circuits_[id], theta, faults[id]);
      }
      if (options_.shots == 0) {
        for (std::size_t m = 0; m < masks.size(); ++m) {
          parities[m] = ExpectationZString(state, masks[m]);
        }
      } else {
        parities = SampledParities(state, masks, options_.shots, rng);
      }
    }
    for (std::size_t m = 0; m < masks.size(); ++m) {
      energy += h_.terms()[mc.term_refs[m]].coefficient * parities[m];
    }
  }
  result.energy = energy;
  return result;
}

EnergyResult EvalEnergy(const Circuit& ansatz, std::span<const double> theta,
                        const PauliSum& h, const NoiseConfig& noise, Rng& rng,
                        EstimatorOptions options) {
  return EnergyEstimator(ansatz, h, options).Evaluate(theta, noise, rng);
}

}  // namespace vqelab
