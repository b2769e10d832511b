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
#include <limits>

#include <gtest/gtest.h>

#include "vqelab/error.h"
#include "vqelab/optimizer.h"
#include "vqelab/rng.h"

namespace vqelab {
namespace {

double Quadratic(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

TEST(SpsaGainsTest, Schedules) {
  const SpsaGains g{0.3, 0.15, 20.0, 0.602, 0.101};
  EXPECT_DOUBLE_EQ(g.StepAt(0), 0.3 / std::pow(21.0, 0.602));
  EXPECT_DOUBLE_EQ(g.StepAt(9), 0.3 / std::pow(30.0, 0.602));
  EXPECT_DOUBLE_EQ(g.PerturbationAt(0), 0.15);
  EXPECT_DOUBLE_EQ(g.PerturbationAt(3), 0.15 / std::pow(4.0, 0.101));
  EXPECT_THROW((SpsaGains{-0.1, 0.1, 0, 0.6, 0.1}.Validate()), Error);
  EXPECT_THROW((SpsaGains{0.1, -1.0, 0, 0.6, 0.1}.Validate()), Error);
  EXPECT_THROW((GdGains{0.1, 0.0}.Validate()), Error);
}

// One step recomputed by hand from the same generator stream.
TEST(SpsaStepTest, MatchesScalarReference) {
  const SpsaGains g{0.5, 0.2, 10.0, 0.602, 0.101};
  auto f = [](std::span<const double> x) {
    return std::sin(x[0]) + 2.0 * x[1] * x[1] - x[0] * x[1];
  };
  OptimizerState state = OptimizerState::Start({0.4, -0.3});
  state.t = 4;
  Rng rng(77), mirror(77);
  const StepResult step = SpsaStep(state, g, f, rng);

  const double d0 = (mirror.NextU64() >> 63) ? 1.0 : -1.0;
  const double d1 = (mirror.NextU64() >> 63) ? 1.0 : -1.0;
  const double ck = 0.2 / std::pow(5.0, 0.101);
  const double ak = 0.5 / std::pow(15.0, 0.602);
  const double xp[2] = {0.4 + ck * d0, -0.3 + ck * d1};
  const double xm[2] = {0.4 - ck * d0, -0.3 - ck * d1};
  const double fp = f(xp);
  const double fm = f(xm);
  const double ghat = (fp - fm) / (2 * ck);
  EXPECT_DOUBLE_EQ(step.alpha_t, ak);
  EXPECT_DOUBLE_EQ(state.theta[0], 0.4 - ak * ghat * d0);
  EXPECT_DOUBLE_EQ(state.theta[1], -0.3 - ak * ghat * d1);
  EXPECT_EQ(state.t, 5u);
  EXPECT_EQ(state.objective_calls, 2u);
  EXPECT_DOUBLE_EQ(state.best_energy, std::min(fp, fm));
  ASSERT_EQ(step.values.size(), 2u);
  EXPECT_DOUBLE_EQ(step.values[0], fp);
}

// theta_{t+1} = theta_t + alpha_t * d_t holds for every step.
TEST(SpsaStepTest, UpdateIdentity) {
  OptimizerState state = OptimizerState::Start({1.0, -2.0, 0.5});
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> before = state.theta;
    const StepResult step = SpsaStep(state, SpsaGains{}, Quadratic, rng);
    for (std::size_t k = 0; k < before.size(); ++k) {
      EXPECT_DOUBLE_EQ(state.theta[k],
                       before[k] + step.alpha_t * step.direction[k]);
    }
  }
}

TEST(SpsaStepTest, ConvergesOnParabola) {
  OptimizerState state = OptimizerState::Start({1.5});
  Rng rng(1);
  const SpsaGains g{0.5, 0.1, 10.0, 0.602, 0.101};
  for (int i = 0; i < 200; ++i) SpsaStep(state, g, Quadratic, rng);
  EXPECT_LT(std::abs(state.theta[0]), 0.05);
}

TEST(SpsaStepTest, ConstantObjectiveLeavesThetaUnchanged) {
  OptimizerState state = OptimizerState::Start({0.3, 0.7});
  Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    SpsaStep(state, SpsaGains{}, [](std::span<const double>) { return 4.2; },
             rng);
  }
  EXPECT_EQ(state.theta, (std::vector<double>{0.3, 0.7}));
}

TEST(SpsaStepTest, NonFiniteObjectiveThrowsWithoutCommitting) {
  OptimizerState state = OptimizerState::Start({0.3});
  Rng rng(2);
  const auto nan_f = [](std::span<const double>) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  try {
    SpsaStep(state, SpsaGains{}, nan_f, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNumeric);
  }
  EXPECT_EQ(state.t, 0u);
  EXPECT_EQ(state.theta[0], 0.3);
  EXPECT_EQ(state.objective_calls, 0u);
}

TEST(FdGradientStepTest, CentralDifferenceOfTrigObjective) {
  auto f = [](std::span<const double> x) {
    return std::sin(x[0]) * std::cos(x[1]);
  };
  OptimizerState state = OptimizerState::Start({0.3, 1.1});
  const StepResult step = FdGradientStep(state, GdGains{0.1, 1e-5}, f);
  EXPECT_NEAR(step.direction[0], -std::cos(0.3) * std::cos(1.1), 1e-9);
  EXPECT_NEAR(step.direction[1], std::sin(0.3) * std::sin(1.1), 1e-9);
  EXPECT_EQ(state.objective_calls, 4u);
  EXPECT_DOUBLE_EQ(state.theta[0], 0.3 + 0.1 * step.direction[0]);
}

TEST(ShouldTerminateTest, BudgetsAndWindow) {
  OptimizerState state = OptimizerState::Start({0.0});
  Budget b;
  b.max_iterations = 3;
  EXPECT_FALSE(ShouldTerminate(state, b).stop);
  state.t = 3;
  EXPECT_EQ(ShouldTerminate(state, b).reason, StopReason::kIterations);

  Budget evals;
  evals.max_iterations = 0;
  evals.max_evaluations = 10;
  state.objective_calls = 10;
  EXPECT_EQ(ShouldTerminate(state, evals).reason, StopReason::kEvaluations);

  Budget window;
  window.max_iterations = 0;
  window.window = 2;
  window.tolerance = 1e-3;
  state.objective_calls = 0;
  state.best_history = {-1.0, -1.5, -1.6};
  EXPECT_FALSE(ShouldTerminate(state, window).stop);
  state.best_history = {-1.0, -1.5, -1.6, -1.6, -1.6};
  EXPECT_EQ(ShouldTerminate(state, window).reason, StopReason::kConverged);
  EXPECT_EQ(StopReasonName(StopReason::kConverged), "converged");
}

}  // namespace
}  // namespace vqelab
