// Copyright 2026 The regular-qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rqg/expansion.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "rqg/errors.hpp"
#include "rqg/spectral_core.hpp"
#include "test_support.hpp"

namespace rqg {
namespace {

constexpr double kPi = std::numbers::pi;

class StepExpansion : public ::testing::Test {
 protected:
  ChainGraph chain = testing::step_chain();
  TrigForm trig = trig_form(chain);
  long mu = find_mu(trig);
};

TEST_F(StepExpansion, ReferenceTruncatedLevels) {
  // Reference values carry four decimals at budget 5 and six at budget 20.
  EXPECT_NEAR(expand_level(chain, trig, mu, 1, 5), 4.1161, 1e-4);
  EXPECT_NEAR(expand_level(chain, trig, mu, 10, 5), 39.2866, 1e-4);
  EXPECT_NEAR(expand_level(chain, trig, mu, 100, 5), 394.9477, 1e-4);
  EXPECT_NEAR(expand_level(chain, trig, mu, 1, 20), 4.105130, 1e-6);
  EXPECT_NEAR(expand_level(chain, trig, mu, 10, 20), 39.305212, 1e-6);
  EXPECT_NEAR(expand_level(chain, trig, mu, 100, 20), 394.964555, 1e-6);
}

TEST_F(StepExpansion, EmptyBudgetIsTheBareAverage) {
  for (long n : {1L, 10L, 100L}) {
    const LevelEstimate e = expand_level_detailed(chain, trig, mu, n, 0);
    EXPECT_EQ(e.terms_used, 0u);
    EXPECT_DOUBLE_EQ(e.estimate, separator(trig, mu, n) - kPi / (2 * trig.s0()));
  }
}

TEST_F(StepExpansion, TermsUsed) {
  EXPECT_EQ(expand_level_detailed(chain, trig, mu, 1, 5).terms_used, 23u);
  EXPECT_EQ(expand_level_detailed(chain, trig, mu, 1, 20).terms_used, 111321u);
}

TEST_F(StepExpansion, IndependentOfThreadCount) {
  const double serial = expand_level(chain, trig, mu, 10, 18, {.threads = 1});
  for (unsigned t : {2u, 3u, 4u, 7u}) {
    EXPECT_EQ(expand_level(chain, trig, mu, 10, 18, {.threads = t}), serial);
  }
  for (std::size_t block : {1u, 17u, 256u, 100000u}) {
    EXPECT_NEAR(expand_level(chain, trig, mu, 10, 18, {.threads = 3, .block_size = block}),
                serial, 1e-12);
  }
}

TEST_F(StepExpansion, EstimatesStayInsideTheirInterval) {
  for (long n : {1L, 10L, 100L}) {
    for (int budget : {5, 10, 15, 20}) {
      const double k = expand_level(chain, trig, mu, n, budget);
      EXPECT_GT(k, separator(trig, mu, n - 1));
      EXPECT_LT(k, separator(trig, mu, n));
    }
  }
}

TEST_F(StepExpansion, ConvergenceReport) {
  const std::array<int, 2> budgets = {5, 20};
  const ExpansionReport ten = convergence_report(chain, trig, mu, 10, budgets);
  EXPECT_NEAR(ten.exact, 39.305209, 1e-6);
  EXPECT_NEAR(ten.errors[0], 1.9e-2, 0.1e-2);
  EXPECT_LT(ten.errors[1], 1e-5);

  const ExpansionReport one = convergence_report(chain, trig, mu, 1, budgets);
  EXPECT_NEAR(one.errors[0], 9.0e-3, 0.1e-3);
  EXPECT_NEAR(one.errors[1], 2.0e-3, 0.1e-3);

  for (long n : {1L, 10L, 100L}) {
    const ExpansionReport rep = convergence_report(chain, trig, mu, n, budgets);
    EXPECT_LT(rep.errors[1], rep.errors[0]) << "n=" << n;
    EXPECT_LE(rep.terms_used[0], rep.terms_used[1]);
  }
}

TEST_F(StepExpansion, RejectsBadArguments) {
  const std::array<int, 2> decreasing = {20, 5};
  EXPECT_THROW(convergence_report(chain, trig, mu, 1, decreasing), InvalidInput);
  EXPECT_THROW(convergence_report(chain, trig, mu, 1, std::span<const int>{}), InvalidInput);
  EXPECT_THROW(expand_level(chain, trig, mu, 1, 35), InvalidInput);
  EXPECT_THROW(expand_level(chain, trig, mu, 0, 5), InvalidInput);
  const TrigForm other = trig_form(chain_from_step({0.4, 0.5}));
  EXPECT_THROW(expand_level(chain, other, mu, 1, 5), InvalidInput);
}

TEST_F(StepExpansion, DensityWithoutOrbitsIsFlat) {
  const std::vector<double> grid = {1.0, 2.0, 5.0, 30.0};
  for (double rho : density_truncated(chain, trig, grid, 0, 0.2)) {
    EXPECT_DOUBLE_EQ(rho, trig.s0() / kPi);
  }
}

TEST_F(StepExpansion, HeavySmoothingRecoversMeanDensity) {
  const std::vector<double> grid = {separator(trig, mu, 3), separator(trig, mu, 7)};
  for (double rho : density_truncated(chain, trig, grid, 20, 10.0)) {
    EXPECT_NEAR(rho, 0.2530483, 1e-3);
  }
}

TEST_F(StepExpansion, DensityPeaksSitOnLevels) {
  const double lo = separator(trig, mu, 0);
  const double hi = separator(trig, mu, 20);
  const int points = 4001;
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * i / (points - 1);
  const std::vector<double> rho = density_truncated(chain, trig, grid, 20, 0.2);

  double integral = 0.0;
  for (int i = 1; i < points; ++i) integral += 0.5 * (rho[i] + rho[i - 1]) * (grid[i] - grid[i - 1]);
  EXPECT_NEAR(integral, 20.0, 0.4);

  for (long n = 1; n <= 20; ++n) {
    const double a = separator(trig, mu, n - 1);
    const double b = separator(trig, mu, n);
    int best = -1;
    for (int i = 0; i < points; ++i) {
      if (grid[i] < a || grid[i] > b) continue;
      if (best < 0 || rho[i] > rho[best]) best = i;
    }
    ASSERT_GT(best, 0);
    ASSERT_LT(best, points - 1);
    EXPECT_GT(rho[best], rho[best - 1]);
    EXPECT_GE(rho[best], rho[best + 1]);
    EXPECT_NEAR(grid[best], exact_root(trig, mu, n), 0.1) << "n=" << n;
  }
}

TEST_F(StepExpansion, DensityRejectsBadArguments) {
  const std::vector<double> grid = {1.0, 0.5};
  EXPECT_THROW(density_truncated(chain, trig, grid, 5, 0.2), InvalidInput);
  const std::vector<double> ok = {1.0, 2.0};
  EXPECT_THROW(density_truncated(chain, trig, ok, 5, 0.0), InvalidInput);
}

}  // namespace
}  // namespace rqg
