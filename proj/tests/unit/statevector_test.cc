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


#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "testing/reference.h"
#include "vqelab/circuit.h"
#include "vqelab/error.h"
#include "vqelab/statevector.h"

namespace vqelab {
namespace {

using testing::C;
using testing::Mat;

void ExpectStatesNear(const StateVector& s, const std::vector<C>& ref,
                      double tol = 1e-12) {
  ASSERT_EQ(s.dim(), ref.size());
  for (std::size_t k = 0; k < ref.size(); ++k) {
    EXPECT_NEAR(s[k].real(), ref[k].real(), tol) << "index " << k;
    EXPECT_NEAR(s[k].imag(), ref[k].imag(), tol) << "index " << k;
  }
}

std::vector<C> ZeroKet(int n) {
  std::vector<C> v(std::size_t{1} << n);
  v[0] = 1.0;
  return v;
}

Mat GateMatrix(const Gate& g, double angle, int n) {
  switch (g.kind) {
    case GateKind::kRY: return testing::Lift(testing::RyMat(angle), g.qubit, n);
    case GateKind::kRZ: return testing::Lift(testing::RzMat(angle), g.qubit, n);
    case GateKind::kH: return testing::Lift(testing::HMat(), g.qubit, n);
    case GateKind::kX: return testing::Lift(testing::XMat(), g.qubit, n);
    case GateKind::kY: return testing::Lift(testing::YMat(), g.qubit, n);
    case GateKind::kZ: return testing::Lift(testing::ZMat(), g.qubit, n);
    case GateKind::kCNOT: return testing::CnotMat(g.qubit, g.target, n);
  }
  return Mat::Identity(std::size_t{1} << n);
}

TEST(StateVectorTest, ZeroStateAndCapacity) {
  const StateVector s = StateVector::Zero(3);
  EXPECT_EQ(s.dim(), 8u);
  EXPECT_EQ(s[0], Amplitude(1.0));
  EXPECT_DOUBLE_EQ(s.NormSquared(), 1.0);
  for (int bad : {0, -1, kMaxQubits + 1}) {
    try {
      StateVector::Zero(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kCapacity);
    }
  }
}

TEST(StateVectorTest, QubitZeroIsLeastSignificantBit) {
  StateVector s = StateVector::Zero(2);
  s.ApplyX(0);
  EXPECT_EQ(s[1], Amplitude(1.0));
  s.ApplyX(1);
  EXPECT_EQ(s[3], Amplitude(1.0));
}

TEST(StateVectorTest, CnotTruthTable) {
  for (std::uint64_t k = 0; k < 4; ++k) {
    StateVector s = StateVector::Basis(2, k);
    s.ApplyCNOT(0, 1);
    const std::uint64_t expected = (k & 1) ? k ^ 2 : k;
    EXPECT_EQ(s[expected], Amplitude(1.0)) << "input " << k;
  }
}

TEST(StateVectorTest, OutOfRangeQubitThrows) {
  StateVector s = StateVector::Zero(2);
  try {
    s.ApplyH(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndex);
  }
  EXPECT_THROW(s.ApplyCNOT(1, 1), Error);
}

TEST(StateVectorTest, FromAmplitudesValidatesNorm) {
  EXPECT_THROW(StateVector::FromAmplitudes({1.0, 1.0}), Error);
  EXPECT_THROW(StateVector::FromAmplitudes({1.0, 0.0, 0.0}), Error);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NO_THROW(StateVector::FromAmplitudes({s, Amplitude(0, s)}));
}

TEST(StateVectorTest, UnboundRotationRejected) {
  StateVector s = StateVector::Zero(1);
  try {
    s.Apply(Gate::RY(0, ParamSlot{0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnboundParameter);
  }
}

// Random circuits on 1..4 qubits checked against full matrix products.
TEST(StateVectorTest, MatchesDenseMatrixProduct) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Gate> gates;
      std::vector<double> angles;
      for (int i = 0; i < 25; ++i) {
        const int kind = static_cast<int>(gen() % 7);
        const int q = static_cast<int>(gen() % n);
        double a = angle(gen);
        switch (kind) {
          case 0: gates.push_back(Gate::RY(q, a)); break;
          case 1: gates.push_back(Gate::RZ(q, a)); break;
          case 2: gates.push_back(Gate::H(q)); break;
          case 3: gates.push_back(Gate::X(q)); break;
          case 4: gates.push_back(Gate::Y(q)); break;
          case 5: gates.push_back(Gate::Z(q)); break;
          default:
            if (n < 2) {
              gates.push_back(Gate::H(q));
            } else {
              const int t = static_cast<int>((q + 1 + gen() % (n - 1)) % n);
              gates.push_back(Gate::CNOT(q, t));
            }
        }
        angles.push_back(a);
      }
      StateVector s = StateVector::Zero(n);
      std::vector<C> ref = ZeroKet(n);
      for (std::size_t i = 0; i < gates.size(); ++i) {
        s.Apply(gates[i]);
        ref = testing::Apply(GateMatrix(gates[i], angles[i], n), ref);
      }
      ExpectStatesNear(s, ref);
      EXPECT_NEAR(s.NormSquared(), 1.0, 1e-12);
    }
  }
}

TEST(StateVectorTest, PauliActionMatchesFormula) {
  // P|k> = i^{#Y} (-1)^{popcount(k & z)} |k ^ x>, checked on basis states.
  for (const char* w : {"XY", "YZ", "ZZ", "YY", "IX"}) {
    const PauliString word = PauliString::FromString(w);
    const Mat m = testing::WordMat(w);
    for (std::uint64_t k = 0; k < 4; ++k) {
      StateVector s = StateVector::Basis(2, k);
      for (int q = 0; q < 2; ++q) s.ApplyPauli(word[q], q);
      std::vector<C> e(4);
      e[k] = 1.0;
      ExpectStatesNear(s, testing::Apply(m, e));
    }
  }
}

TEST(StateVectorTest, ExpectationsMatchDenseReference) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Amplitude> amps(8);
    double norm = 0.0;
    for (auto& a : amps) {
      a = {nd(gen), nd(gen)};
      norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    const StateVector s = StateVector::FromAmplitudes(amps);
    const std::vector<C> v(amps.begin(), amps.end());
    for (const char* w : {"XYZ", "ZIZ", "YYI", "IXI", "III", "ZZZ"}) {
      const auto mv = testing::Apply(testing::WordMat(w), v);
      C ref = 0.0;
      for (std::size_t k = 0; k < 8; ++k) ref += std::conj(v[k]) * mv[k];
      EXPECT_NEAR(PauliExpectation(s, PauliString::FromString(w)), ref.real(),
                  1e-12)
          << w;
    }
    const auto bloch = BlochVector(s, 1);
    EXPECT_NEAR(bloch[0], PauliExpectation(s, PauliString::FromString("IXI")),
                1e-12);
    EXPECT_NEAR(bloch[1], PauliExpectation(s, PauliString::FromString("IYI")),
                1e-12);
    EXPECT_NEAR(bloch[2], ExpectationZString(s, 0b010), 1e-12);
  }
}

TEST(StateVectorTest, FidelityProperties) {
  StateVector a = StateVector::Zero(2);
  a.ApplyH(0);
  a.ApplyCNOT(0, 1);
  EXPECT_NEAR(Fidelity(a, a), 1.0, 1e-14);
  StateVector b = a;
  b.ApplyZ(0);
  EXPECT_NEAR(Fidelity(a, b), 0.0, 1e-14);
  EXPECT_THROW(Fidelity(a, StateVector::Zero(3)), Error);
}

TEST(StateVectorTest, RotationConventions) {
  // RY(pi)|0> = |1>, RZ(t) = diag(e^{-it/2}, e^{it/2}).
  StateVector s = StateVector::Zero(1);
  s.ApplyRY(0, std::numbers::pi);
  EXPECT_NEAR(s[1].real(), 1.0, 1e-15);
  StateVector t = StateVector::Basis(1, 1);
  t.ApplyRZ(0, 0.8);
  EXPECT_NEAR(std::arg(t[1]), 0.4, 1e-15);
}

}  // namespace
}  // namespace vqelab
