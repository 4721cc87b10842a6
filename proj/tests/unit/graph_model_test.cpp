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

#include "rqg/graph_model.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "rqg/errors.hpp"
#include "rqg/spectral_core.hpp"
#include "rqg/trig_form.hpp"
#include "test_support.hpp"

namespace rqg {
namespace {

TEST(ChainFromStep, ReferenceParameters) {
  const ChainGraph c = chain_from_step({0.3, 0.5});
  ASSERT_EQ(c.bond_count(), 2u);
  EXPECT_DOUBLE_EQ(c.bond_actions()[0], 0.3);
  EXPECT_NEAR(c.bond_actions()[1], 0.4949747, 1e-7);
  EXPECT_NEAR(c.vertex_reflections()[0], 0.1715729, 1e-7);
  EXPECT_EQ(c.wall_phase(), -1.0);
}

TEST(ChainFromStep, FreeParticleHasNoReflection) {
  const ChainGraph c = chain_from_step({0.3, 0.0});
  EXPECT_DOUBLE_EQ(c.bond_actions()[0], 0.3);
  EXPECT_DOUBLE_EQ(c.bond_actions()[1], 0.7);
  EXPECT_EQ(c.vertex_reflections()[0], 0.0);

  const ChainGraph box = chain_from_step({0.5, 0.0});
  EXPECT_EQ(box.bond_actions()[0], box.bond_actions()[1]);
  EXPECT_EQ(box.vertex_reflections()[0], 0.0);
}

TEST(ChainFromStep, RejectsOutOfRangeParameters) {
  EXPECT_THROW(chain_from_step({0.3, 1.0}), InvalidInput);
  EXPECT_THROW(chain_from_step({0.3, 1.5}), InvalidInput);
  EXPECT_THROW(chain_from_step({0.3, -0.1}), InvalidInput);
  EXPECT_THROW(chain_from_step({0.0, 0.5}), InvalidInput);
  EXPECT_THROW(chain_from_step({1.0, 0.5}), InvalidInput);
  EXPECT_THROW(chain_from_step({NAN, 0.5}), InvalidInput);
}

TEST(ChainFromStep, ReflectionIncreasesWithLambda) {
  double prev = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const double lambda = i / 1000.0;
    const double r = chain_from_step({0.3, lambda}).vertex_reflections()[0];
    if (i == 0) EXPECT_EQ(r, 0.0);
    EXPECT_GT(r, prev);
    EXPECT_LT(r, 1.0);
    prev = r;
  }
}

TEST(ChainFromManhattan, TwoRegionsMatchStep) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(0.01, 0.99);
  std::uniform_real_distribution<double> lam(0.0, 0.99);
  for (int trial = 0; trial < 200; ++trial) {
    const double b = pos(rng);
    const double lambda = lam(rng);
    const ChainGraph step = chain_from_step({b, lambda});
    const ChainGraph man = chain_from_manhattan({{b, 1.0 - b}, {0.0, lambda}});
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_NEAR(step.bond_actions()[i], man.bond_actions()[i], 1e-15);
    }
    EXPECT_NEAR(step.vertex_reflections()[0], man.vertex_reflections()[0], 1e-15);
  }
}

TEST(ChainFromManhattan, EqualHeightsDoNotReflect) {
  const ChainGraph c = chain_from_manhattan({{0.5, 0.5}, {0.3, 0.3}});
  EXPECT_EQ(c.vertex_reflections()[0], 0.0);
}

TEST(ChainFromManhattan, ThreeRegions) {
  const ChainGraph c = chain_from_manhattan({{0.2, 0.3, 0.5}, {0.0, 0.5, 0.75}});
  ASSERT_EQ(c.bond_count(), 3u);
  EXPECT_NEAR(c.bond_actions()[0], 0.2, 1e-15);
  EXPECT_NEAR(c.bond_actions()[1], 0.2121320, 1e-7);
  EXPECT_NEAR(c.bond_actions()[2], 0.25, 1e-15);
  EXPECT_NEAR(c.vertex_reflections()[0], 0.1715729, 1e-7);
  EXPECT_NEAR(c.vertex_reflections()[1], 0.1715729, 1e-7);
}

TEST(ChainFromManhattan, RejectsInvalidSpecs) {
  EXPECT_THROW(chain_from_manhattan({{0.5, 0.5}, {0.0, 1.0}}), InvalidInput);
  EXPECT_THROW(chain_from_manhattan({{0.5, 0.4}, {0.0, 0.5}}), InvalidInput);
  EXPECT_THROW(chain_from_manhattan({{0.5, 0.5}, {0.0}}), InvalidInput);
  EXPECT_THROW(chain_from_manhattan({{1.2, -0.2}, {0.0, 0.5}}), InvalidInput);
  EXPECT_THROW(chain_from_manhattan({{}, {}}), InvalidInput);
}

TEST(ChainGraph, Invariants) {
  EXPECT_THROW(ChainGraph({}, {}), InvalidInput);
  EXPECT_THROW(ChainGraph({1.0, 1.0}, {}), InvalidInput);
  EXPECT_THROW(ChainGraph({1.0, 0.0}, {0.1}), InvalidInput);
  EXPECT_THROW(ChainGraph({1.0, 1.0}, {1.0}), InvalidInput);
  EXPECT_THROW(ChainGraph({1.0, 1.0}, {-1.0}), InvalidInput);
  EXPECT_NO_THROW(ChainGraph({1.0}, {}));
  EXPECT_DOUBLE_EQ(ChainGraph({0.25, 0.5}, {0.2}).total_action(), 0.75);
}

TEST(SecularValue, VanishesAtReferenceGroundState) {
  EXPECT_NEAR(secular_value(testing::step_chain(), 4.107149), 0.0, 1e-5);
}

TEST(SecularValue, MatchesClosedFormForTwoBonds) {
  const ChainGraph c = testing::step_chain();
  const double l1 = c.bond_actions()[0];
  const double l2 = c.bond_actions()[1];
  const double r = c.vertex_reflections()[0];
  const auto closed = [&](double k) {
    return std::sin((l1 + l2) * k) - r * std::sin((l1 - l2) * k);
  };
  EXPECT_NEAR(secular_value(c, 5.0), closed(5.0), 1e-12);
  for (int i = 1; i <= 2000; ++i) {
    const double k = 0.05 * i;
    EXPECT_NEAR(secular_value(c, k), closed(k), 1e-12) << "k=" << k;
  }
}

TEST(SecularValue, SignNearZeroMatchesTrigForm) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ChainGraph c = testing::random_chain(rng, 1 + trial % 5);
    const TrigForm t = trig_form(c);
    const double k = 1e-6;
    EXPECT_EQ(std::signbit(secular_value(c, k)), std::signbit(t.evaluate(k)));
  }
}

TEST(SecularValue, ThreeRegionRootsMatchPlaneWaveScan) {
  const ManhattanPotentialSpec spec{{0.2, 0.3, 0.5}, {0.0, 0.5, 0.75}};
  const ChainGraph c = chain_from_manhattan(spec);
  const TrigForm t = trig_form(c);
  const long mu = find_mu(t);

  // Roots from a fine sign scan of the plane-wave oracle, refined by
  // bisection on the oracle itself.
  std::vector<double> oracle_roots;
  const double dk = 1e-3;
  double prev = testing::plane_wave_secular(spec, dk);
  for (double k = 2 * dk; oracle_roots.size() < 30; k += dk) {
    const double cur = testing::plane_wave_secular(spec, k);
    if (std::signbit(cur) != std::signbit(prev)) {
      double a = k - dk;
      double b = k;
      for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (a + b);
        if (std::signbit(testing::plane_wave_secular(spec, m)) ==
            std::signbit(testing::plane_wave_secular(spec, a))) {
          a = m;
        } else {
          b = m;
        }
      }
      oracle_roots.push_back(0.5 * (a + b));
    }
    prev = cur;
  }
  for (std::size_t i = 0; i < oracle_roots.size(); ++i) {
    EXPECT_NEAR(exact_root(t, mu, static_cast<long>(i + 1)), oracle_roots[i], 1e-10);
  }
}

}  // namespace
}  // namespace rqg
