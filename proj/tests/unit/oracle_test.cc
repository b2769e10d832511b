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


#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "testing/reference.h"
#include "vqelab/error.h"
#include "vqelab/oracle.h"
#include "vqelab/pauli.h"

namespace vqelab {
namespace {

// Cyclic Jacobi rotations on the real symmetric embedding
// [[Re A, -Im A], [Im A, Re A]], whose spectrum is that of A, doubled.
std::vector<double> JacobiEigenvalues(const DenseOperator& a) {
  const std::size_t n = a.dim();
  const std::size_t m = 2 * n;
  std::vector<double> s(m * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Amplitude v = a(i, j);
      s[i * m + j] = v.real();
      s[(i + n) * m + (j + n)] = v.real();
      s[i * m + (j + n)] = -v.imag();
      s[(i + n) * m + j] = v.imag();
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += s[p * m + q] * s[p * m + q];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = s[p * m + q];
        if (std::abs(apq) < 1e-300) continue;
        const double tau = (s[q * m + q] - s[p * m + p]) / (2 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1 + tau * tau));
        const double c = 1 / std::sqrt(1 + t * t);
        const double sn = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double skp = s[k * m + p];
          const double skq = s[k * m + q];
          s[k * m + p] = c * skp - sn * skq;
          s[k * m + q] = sn * skp + c * skq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double spk = s[p * m + k];
          const double sqk = s[q * m + k];
          s[p * m + k] = c * spk - sn * sqk;
          s[q * m + k] = sn * spk + c * sqk;
        }
      }
    }
  }
  std::vector<double> eig(m);
  for (std::size_t i = 0; i < m; ++i) eig[i] = s[i * m + i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

PauliSum Load(const std::string& rel) {
  return LoadHamiltonian(testing::DataDir() / rel);
}

TEST(DenseOperatorTest, MatchesKroneckerConstruction) {
  PauliSum h(3);
  h.Add(0.3, "XYZ");
  h.Add(-0.7, "IZZ");
  h.Add(0.2, "YYI");
  h.Add(1.1, "III");
  const DenseOperator d = ToDense(h);
  testing::Mat ref(8);
  for (const PauliTerm& t : h.terms()) {
    const auto m = testing::WordMat(t.word.ToString());
    for (std::size_t i = 0; i < 64; ++i) ref.a[i] += t.coefficient * m.a[i];
  }
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      EXPECT_NEAR(std::abs(d(i, j) - ref(i, j)), 0.0, 1e-15);
  EXPECT_LT(d.HermitianDefect(), 1e-15);
  EXPECT_NEAR(d.Trace().real(), 8 * 1.1, 1e-12);
}

TEST(DenseOperatorTest, CapacityGuard) {
  try {
    DenseOperator d(kMaxDenseQubits + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapacity);
  }
}

TEST(ExactMinEigenvalueTest, AgreesWithJacobiOnShippedData) {
  std::vector<std::string> files;
  for (int i = 2; i <= 20; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "h2/d_%.2f.ham", i / 10.0);
    files.push_back(name);
  }
  files.push_back("h4/d_1.00.ham");
  files.push_back("h4/d_2.00.ham");
  for (const std::string& f : files) {
    const PauliSum h = Load(f);
    const double lambda = ExactMinEigenvalue(h).energy;
    EXPECT_NEAR(lambda, JacobiEigenvalues(ToDense(h)).front(), 1e-8) << f;
  }
}

TEST(ExactMinEigenvalueTest, EigenpairResidual) {
  for (const char* f : {"h2/d_0.70.ham", "h4/d_1.00.ham"}) {
    const PauliSum h = Load(f);
    const GroundState g = ExactMinEigenvalue(h);
    EXPECT_NEAR(g.state.NormSquared(), 1.0, 1e-12);
    const auto hv = ToDense(h).Multiply(g.state.amplitudes());
    double residual = 0.0;
    for (std::size_t k = 0; k < hv.size(); ++k) {
      residual += std::norm(hv[k] - g.energy * g.state[k]);
    }
    EXPECT_LT(std::sqrt(residual), 1e-8) << f;
    EXPECT_NEAR(DirectExpectation(g.state, h), g.energy, 1e-10) << f;
  }
}

TEST(ExactMinEigenvalueTest, HydrogenReferenceValue) {
  // STO-3G full CI at 0.70 Angstrom.
  EXPECT_NEAR(ExactMinEigenvalue(Load("h2/d_0.70.ham")).energy, -1.13619,
              1e-5);
}

TEST(ExactMinEigenvalueTest, InvariantUnderQubitRelabeling) {
  const PauliSum h = Load("h4/d_1.00.ham");
  const std::vector<int> perm = {3, 0, 5, 1, 4, 2};
  PauliSum permuted(6);
  for (const PauliTerm& t : h.terms()) {
    std::vector<Pauli> ops(6);
    for (int q = 0; q < 6; ++q) ops[perm[q]] = t.word[q];
    permuted.Add(t.coefficient, PauliString(ops));
  }
  EXPECT_NEAR(ExactMinEigenvalue(h).energy,
              ExactMinEigenvalue(permuted).energy, 1e-10);
}

TEST(ExactMinEigenvalueTest, DiagonalOperator) {
  PauliSum h(2);
  h.Add(1.0, "ZI");
  h.Add(0.5, "IZ");
  const GroundState g = ExactMinEigenvalue(h);
  EXPECT_NEAR(g.energy, -1.5, 1e-12);
  EXPECT_NEAR(std::norm(g.state[3]), 1.0, 1e-12);
}

}  // namespace
}  // namespace vqelab
