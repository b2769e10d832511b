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

#include "vqelab/stats.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "vqelab/error.h"

namespace vqelab {

double Mean(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorCode::kUndefined, "mean of empty sample");
  KahanSum acc;
  for (double x : xs) acc.Add(x);
  return acc.value() / static_cast<double>(xs.size());
}

double Median(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorCode::kUndefined, "median of empty sample");
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double PercentileNearestRank(std::span<const double> xs, double p) {
  if (xs.empty()) {
    throw Error(ErrorCode::kUndefined, "percentile of empty sample");
  }
  if (!(p >= 0.0 && p <= 100.0)) {
    throw Error(ErrorCode::kConfig, "percentile outside [0, 100]");
  }
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const double rank = std::ceil(p / 100.0 * static_cast<double>(v.size()));
  const std::size_t idx = rank < 1.0 ? 0 : static_cast<std::size_t>(rank) - 1;
  return v[std::min(idx, v.size() - 1)];
}

std::string FormatDouble(double x) {
  char buf[64];
  // std::to_chars without a format picks the shortest round-trip form.
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string HexU64(std::uint64_t x) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = kDigits[x & 0xf];
    x >>= 4;
  }
  return s;
}

}  // namespace vqelab
