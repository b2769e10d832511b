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

// Parameter updates of the form theta_{t+1} = theta_t + alpha_t * d_t.

#ifndef VQELAB_OPTIMIZER_H_
#define VQELAB_OPTIMIZER_H_

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqelab/rng.h"

namespace vqelab {

enum class OptimizerKind { kSpsa, kGradientDescent };

std::string_view OptimizerKindName(OptimizerKind kind);
std::optional<OptimizerKind> OptimizerKindFromName(std::string_view name);

struct SpsaGains {
  double a = 0.3;
  double c = 0.15;
  double big_a = 20.0;
  double alpha = 0.602;
  double gamma = 0.101;

  double StepAt(std::size_t t) const;          // a / (A + t + 1)^alpha
  double PerturbationAt(std::size_t t) const;  // c / (t + 1)^gamma
  void Validate() const;

  friend bool operator==(const SpsaGains&, const SpsaGains&) = default;
};

struct GdGains {
  double step = 0.1;
  double fd_epsilon = 1e-4;

  void Validate() const;

  friend bool operator==(const GdGains&, const GdGains&) = default;
};

using Objective = std::function<double(std::span<const double>)>;

struct OptimizerState {
  std::vector<double> theta;
  std::size_t t = 0;
  std::vector<double> best_theta;
  double best_energy = std::numeric_limits<double>::infinity();
  std::size_t objective_calls = 0;
  // best_energy after each completed step; drives the convergence window.
  std::vector<double> best_history;

  static OptimizerState Start(std::vector<double> theta0);
};

struct StepResult {
  double alpha_t = 0.0;
  std::vector<double> direction;  // d_t
  // Objective values in evaluation order and the points they were taken at.
  std::vector<double> values;
  std::vector<std::vector<double>> points;
};

// Two evaluations at theta +/- c_t * delta with a Rademacher delta;
// d_t = -(f+ - f-) / (2 c_t) * delta (delta_i^-1 == delta_i).
// Throws ErrorCode::kNumeric on a non-finite value and leaves state as is.
StepResult SpsaStep(OptimizerState& state, const SpsaGains& gains,
                    const Objective& objective, Rng& rng);

// Central differences, 2 * n evaluations; alpha_t = step, d_t = -grad.
StepResult FdGradientStep(OptimizerState& state, const GdGains& gains,
                          const Objective& objective);

struct Budget {
  std::size_t max_iterations = 1000;
  std::size_t max_evaluations = 0;  // 0: unlimited
  std::size_t window = 0;           // 0: no convergence test
  double tolerance = 1e-6;          // relative improvement over the window

  void Validate() const;

  friend bool operator==(const Budget&, const Budget&) = default;
};

enum class StopReason { kNone, kIterations, kEvaluations, kConverged };

std::string_view StopReasonName(StopReason reason);

struct Decision {
  bool stop = false;
  StopReason reason = StopReason::kNone;
};

Decision ShouldTerminate(const OptimizerState& state, const Budget& budget);

}  // namespace vqelab

#endif  // VQELAB_OPTIMIZER_H_
