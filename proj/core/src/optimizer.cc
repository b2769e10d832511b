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

#include "vqelab/optimizer.h"

#include <algorithm>
#include <cmath>

#include "vqelab/error.h"

namespace vqelab {

std::string_view OptimizerKindName(OptimizerKind kind) {
  return kind == OptimizerKind::kSpsa ? "spsa" : "gradient_descent";
}

std::optional<OptimizerKind> OptimizerKindFromName(std::string_view name) {
  if (name == "spsa") return OptimizerKind::kSpsa;
  if (name == "gradient_descent") return OptimizerKind::kGradientDescent;
  return std::nullopt;
}

double SpsaGains::StepAt(std::size_t t) const {
  return a / std::pow(big_a + static_cast<double>(t) + 1.0, alpha);
}

double SpsaGains::PerturbationAt(std::size_t t) const {
  return c / std::pow(static_cast<double>(t) + 1.0, gamma);
}

void SpsaGains::Validate() const {
  const bool ok = std::isfinite(a) && a >= 0.0 && std::isfinite(c) &&
                  c > 0.0 && std::isfinite(big_a) && big_a >= 0.0 &&
                  std::isfinite(alpha) && std::isfinite(gamma);
  if (!ok) throw Error(ErrorCode::kConfig, "invalid SPSA gains");
}

void GdGains::Validate() const {
  if (!(std::isfinite(step) && step >= 0.0 && std::isfinite(fd_epsilon) &&
        fd_epsilon > 0.0)) {
    throw Error(ErrorCode::kConfig, "invalid gradient-descent gains");
  }
}

OptimizerState OptimizerState::Start(std::vector<double> theta0) {
  OptimizerState s;
  s.best_theta = theta0;
  s.theta = std::move(theta0);
  return s;
}

namespace {

double Checked(const Objective& objective, std::span<const double> x) {
  const double v = objective(x);
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kNumeric, "objective returned a non-finite value");
  }
  return v;
}

void Commit(OptimizerState& state, const StepResult& step) {
  for (std::size_t k = 0; k < step.values.size(); ++k) {
    if (step.values[k] < state.best_energy) {
      state.best_energy = step.values[k];
      state.best_theta = step.points[k];
    }
  }
  for (std::size_t i = 0; i < state.theta.size(); ++i) {
    state.theta[i] = state.theta[i] + step.alpha_t * step.direction[i];
  }
  state.objective_calls += step.values.size();
  state.best_history.push_back(state.best_energy);
  ++state.t;
}

}  // namespace

StepResult SpsaStep(OptimizerState& state, const SpsaGains& gains,
                    const Objective& objective, Rng& rng) {
  const std::size_t n = state.theta.size();
  const double ck = gains.PerturbationAt(state.t);
  std::vector<int> delta(n);
  for (int& d : delta) d = rng.Rademacher();

  StepResult step;
  step.alpha_t = gains.StepAt(state.t);
  std::vector<double> plus(state.theta), minus(state.theta);
  for (std::size_t i = 0; i < n; ++i) {
    plus[i] += ck * delta[i];
    minus[i] -= ck * delta[i];
  }
  const double f_plus = Checked(objective, plus);
  const double f_minus = Checked(objective, minus);
  const double g = (f_plus - f_minus) / (2.0 * ck);
  step.direction.resize(n);
  for (std::size_t i = 0; i < n; ++i) step.direction[i] = -g * delta[i];
  step.values = {f_plus, f_minus};
  step.points = {std::move(plus), std::move(minus)};
  Commit(state, step);
  return step;
}

StepResult FdGradientStep(OptimizerState& state, const GdGains& gains,
                          const Objective& objective) {
  const std::size_t n = state.theta.size();
  StepResult step;
  step.alpha_t = gains.step;
  step.direction.resize(n);
  std::vector<double> x(state.theta);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = state.theta[i] + gains.fd_epsilon;
    const double f_plus = Checked(objective, x);
    step.points.push_back(x);
    x[i] = state.theta[i] - gains.fd_epsilon;
    const double f_minus = Checked(objective, x);
    step.points.push_back(x);
    x[i] = state.theta[i];
    step.values.push_back(f_plus);
    step.values.push_back(f_minus);
    step.direction[i] = -(f_plus - f_minus) / (2.0 * gains.fd_epsilon);
  }
  Commit(state, step);
  return step;
}

void Budget::Validate() const {
  if (max_iterations == 0 && max_evaluations == 0) {
    throw Error(ErrorCode::kConfig, "budget allows no iterations");
  }
  if (!(std::isfinite(tolerance) && tolerance >= 0.0)) {
    throw Error(ErrorCode::kConfig, "convergence tolerance must be >= 0");
  }
}

std::string_view StopReasonName(StopReason reason) {
  switch (reason) {
    case StopReason::kNone: return "none";
    case StopReason::kIterations: return "budget";
    case StopReason::kEvaluations: return "evaluation_budget";
    case StopReason::kConverged: return "converged";
  }
  return "?";
}

Decision ShouldTerminate(const OptimizerState& state, const Budget& budget) {
  if (budget.max_iterations > 0 && state.t >= budget.max_iterations) {
    return {true, StopReason::kIterations};
  }
  if (budget.max_evaluations > 0 &&
      state.objective_calls >= budget.max_evaluations) {
    return {true, StopReason::kEvaluations};
  }
  const auto& h = state.best_history;
  if (budget.window > 0 && h.size() > budget.window) {
    const double before = h[h.size() - 1 - budget.window];
    const double now = h.back();
    const double scale = std::max(std::abs(before), 1e-300);
    if ((before - now) / scale < budget.tolerance) {
      return {true, StopReason::kConverged};
    }
  }
  return {};
}

}  // namespace vqelab
