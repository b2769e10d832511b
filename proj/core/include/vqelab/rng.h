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

#ifndef VQELAB_RNG_H_
#define VQELAB_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace vqelab {

// Seeded generator used by every stochastic path. The engine is the standard
// 64-bit Mersenne twister; the conversions to doubles and bounded integers
// are done here rather than with <random> distributions so that draws are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  // Uniform on [lo, hi).
  double Uniform(double lo, double hi);
  // Uniform integer on [0, n), unbiased; n must be > 0.
  std::uint64_t UniformInt(std::uint64_t n);
  bool Bernoulli(double p);
  // +1 or -1 with equal probability.
  int Rademacher();
  double StandardNormal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

// Derives a sub-seed from a master seed and an index path, e.g.
// DeriveSeed(master, {d_index, ratio_index, rep}). Distinct paths give
// statistically independent streams; the result does not depend on the
// order in which sub-tasks are executed.
std::uint64_t DeriveSeed(std::uint64_t master,
                         std::initializer_list<std::uint64_t> path);

}  // namespace vqelab

#endif  // VQELAB_RNG_H_
