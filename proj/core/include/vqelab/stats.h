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

#ifndef VQELAB_STATS_H_
#define VQELAB_STATS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace vqelab {

class KahanSum {
 public:
  void Add(double x) {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double Mean(std::span<const double> xs);
double Median(std::span<const double> xs);

// Nearest-rank percentile: the smallest sample such that at least p percent
// of the samples are <= it, i.e. sorted[ceil(p / 100 * N) - 1], clamped to
// the first element for p = 0. Throws ErrorCode::kUndefined when empty.
double PercentileNearestRank(std::span<const double> xs, double p);

// Shortest decimal form that round-trips to the same double, so written
// artifacts are byte-stable for a given value.
std::string FormatDouble(double x);

// 64-bit FNV-1a, used for config hashes embedded in artifacts.
std::uint64_t Fnv1a64(std::string_view bytes);
std::string HexU64(std::uint64_t x);

}  // namespace vqelab

#endif  // VQELAB_STATS_H_
