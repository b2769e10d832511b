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
#include <set>

#include <gtest/gtest.h>

#include "vqelab/rng.h"

namespace vqelab {
namespace {

TEST(RngTest, DeterministicPerSeed) {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
  EXPECT_NE(Rng(42).NextU64(), c.NextU64());
}

TEST(RngTest, RangesAndMoments) {
  Rng rng(1);
  const int n = 100000;
  double sum = 0.0;
  long rad = 0;
  std::set<std::uint64_t> ints;
  for (int i = 0; i < n; ++i) {
    const double u = rng.Uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    rad += rng.Rademacher();
    const std::uint64_t k = rng.UniformInt(7);
    ASSERT_LT(k, 7u);
    ints.insert(k);
  }
  EXPECT_NEAR(sum / n, 0.5, 5 * std::sqrt(1.0 / 12 / n));
  EXPECT_NEAR(static_cast<double>(rad), 0.0, 5 * std::sqrt(n));
  EXPECT_EQ(ints.size(), 7u);
  EXPECT_FALSE(rng.Bernoulli(0.0));
  EXPECT_TRUE(rng.Bernoulli(1.0));
}

TEST(RngTest, DeriveSeedDependsOnWholePath) {
  const std::uint64_t a = DeriveSeed(1, {0, 1, 2});
  EXPECT_EQ(a, DeriveSeed(1, {0, 1, 2}));
  EXPECT_NE(a, DeriveSeed(1, {0, 2, 1}));
  EXPECT_NE(a, DeriveSeed(2, {0, 1, 2}));
  EXPECT_NE(DeriveSeed(1, {0}), DeriveSeed(1, {0, 0}));
  std::set<std::uint64_t> seen;
  for (std::uint64_t d = 0; d < 20; ++d)
    for (std::uint64_t r = 0; r < 5; ++r)
      for (std::uint64_t k = 0; k < 10; ++k) seen.insert(DeriveSeed(1, {d, r, k}));
  EXPECT_EQ(seen.size(), 1000u);
}

}  // namespace
}  // namespace vqelab
