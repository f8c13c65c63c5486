// Copyright 2026 The colotto Authors
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

#include "colotto/lotto_core.hpp"

#include <gtest/gtest.h>

#include "colotto/errors.hpp"
#include "test_util.hpp"

namespace colotto {
namespace {

TEST(EquilibriumPayoff, Examples) {
  auto p = equilibrium_payoff({1.0, 1.0, 1.0});
  EXPECT_DOUBLE_EQ(p.player, 0.5);
  EXPECT_DOUBLE_EQ(p.adversary, 0.5);

  p = equilibrium_payoff({0.5, 1.0, 1.0});
  EXPECT_DOUBLE_EQ(p.player, 0.25);
  EXPECT_DOUBLE_EQ(p.adversary, 0.75);

  p = equilibrium_payoff({2.0, 1.0, 1.2});
  EXPECT_NEAR(p.player, 0.9, 1e-15);
  EXPECT_NEAR(p.adversary, 0.3, 1e-15);

  p = equilibrium_payoff({0.0, 1.0, 3.0});
  EXPECT_DOUBLE_EQ(p.player, 0.0);
  EXPECT_DOUBLE_EQ(p.adversary, 3.0);
}

TEST(EquilibriumPayoff, ZeroBudgets) {
  // Ties go to the player.
  auto p = equilibrium_payoff({0.0, 0.0, 2.0});
  EXPECT_EQ(p.player, 2.0);
  EXPECT_EQ(p.adversary, 0.0);

  p = equilibrium_payoff({0.7, 0.0, 2.0});
  EXPECT_EQ(p.player, 2.0);
}

TEST(EquilibriumPayoff, RejectsInvalidInputs) {
  EXPECT_THROW(equilibrium_payoff({-0.1, 1.0, 1.0}), DomainError);
  EXPECT_THROW(equilibrium_payoff({1.0, -1.0, 1.0}), DomainError);
  EXPECT_THROW(equilibrium_payoff({1.0, 1.0, 0.0}), DomainError);
  EXPECT_THROW(equilibrium_payoff({1.0, 1.0, -2.0}), DomainError);
  EXPECT_THROW(equilibrium_payoff({std::nan(""), 1.0, 1.0}), DomainError);
}

TEST(EquilibriumPayoff, ContinuousAtEqualBudgets) {
  for (double b : {0.01, 0.3, 1.0, 7.5}) {
    const double below = player_payoff(b, b, 2.0);
    const double above = player_payoff(std::nextafter(b, 10.0), b, 2.0);
    EXPECT_DOUBLE_EQ(below, 1.0);
    EXPECT_NEAR(above, 1.0, 1e-12);
  }
}

TEST(EquilibriumPayoffProperty, ConservationAndBounds) {
  testing::Sampler s(101);
  for (int i = 0; i < 5000; ++i) {
    const LottoInstance inst{s.log_uniform(1e-3, 1e3), s.log_uniform(1e-3, 1e3),
                             s.log_uniform(1e-2, 1e2)};
    const auto p = equilibrium_payoff(inst);
    EXPECT_NEAR(p.player + p.adversary, inst.total_value, 1e-12);
    EXPECT_GE(p.player, 0.0);
    EXPECT_LE(p.player, inst.total_value);
  }
}

TEST(EquilibriumPayoffProperty, MonotoneByFiniteDifferences) {
  testing::Sampler s(202);
  for (int i = 0; i < 5000; ++i) {
    const double x = s.log_uniform(1e-2, 1e2);
    const double xa = s.log_uniform(1e-2, 1e2);
    const double phi = s.log_uniform(1e-1, 10.0);
    const double h = 1e-6 * std::max(x, xa);
    const double base = player_payoff(x, xa, phi);
    EXPECT_GE(player_payoff(x + h, xa, phi) - base, -1e-14);
    EXPECT_LE(player_payoff(x, xa + h, phi) - base, 1e-14);
  }
}

TEST(EquilibriumPayoffProperty, ScaleInvariant) {
  testing::Sampler s(303);
  for (int i = 0; i < 2000; ++i) {
    const double x = s.log_uniform(1e-2, 1e2);
    const double xa = s.log_uniform(1e-2, 1e2);
    const double c = s.log_uniform(1e-3, 1e3);
    EXPECT_NEAR(player_payoff(c * x, c * xa, 1.5), player_payoff(x, xa, 1.5),
                1e-12);
  }
}

}  // namespace
}  // namespace colotto
