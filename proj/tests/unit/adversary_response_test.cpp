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

#include "colotto/adversary_response.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "colotto/errors.hpp"
#include "colotto/lotto_core.hpp"
#include "test_util.hpp"

namespace colotto {
namespace {

using testing::g1;

// Adversary payoff for the split (a, 1 - a) of a unit budget, from the
// Lotto formulas alone.
double adversary_value(const GameParams& g, double a) {
  return g.phi1 + g.phi2 - player_payoff(g.x1, a, g.phi1) -
         player_payoff(g.x2, 1.0 - a, g.phi2);
}

struct GridBest {
  double a = 0.0;
  double value = -1.0;
  double slack = 0.0;  // largest adjacent difference seen on the grid
};

GridBest enumerate_splits(const GameParams& g, int n) {
  GridBest best;
  double prev = adversary_value(g, 0.0);
  for (int k = 0; k <= n; ++k) {
    const double a = static_cast<double>(k) / n;
    const double v = adversary_value(g, a);
    best.slack = std::max(best.slack, std::abs(v - prev));
    prev = v;
    if (v > best.value) {
      best.value = v;
      best.a = a;
    }
  }
  return best;
}

TEST(Normalize, Examples) {
  auto [g, o] = normalize(g1());
  EXPECT_FALSE(o.swapped);
  EXPECT_EQ(g.phi1, 1.0);
  EXPECT_EQ(g.phi2, 1.2);
  EXPECT_EQ(g.x1, 0.5);
  EXPECT_EQ(g.x2, 1.5);

  std::tie(g, o) = normalize({1.2, 1.0, 1.5, 0.5, 1.0});
  EXPECT_TRUE(o.swapped);
  EXPECT_EQ(g.phi1, 1.0);
  EXPECT_EQ(g.phi2, 1.2);
  EXPECT_EQ(g.x1, 0.5);
  EXPECT_EQ(g.x2, 1.5);

  std::tie(g, o) = normalize({2.0, 2.4, 1.0, 3.0, 2.0});
  EXPECT_FALSE(o.swapped);
  EXPECT_EQ(g.phi1, 2.0);
  EXPECT_EQ(g.phi2, 2.4);
  EXPECT_EQ(g.x1, 0.5);
  EXPECT_EQ(g.x2, 1.5);
  EXPECT_EQ(g.adversary_budget, 1.0);
}

TEST(Normalize, RejectsNonpositive) {
  EXPECT_THROW(normalize({0.0, 1.0, 1.0, 1.0, 1.0}), DomainError);
  EXPECT_THROW(normalize({1.0, -1.0, 1.0, 1.0, 1.0}), DomainError);
  EXPECT_THROW(normalize({1.0, 1.0, 0.0, 1.0, 1.0}), DomainError);
  EXPECT_THROW(normalize({1.0, 1.0, 1.0, 0.0, 1.0}), DomainError);
  EXPECT_THROW(normalize({1.0, 1.0, 1.0, 1.0, 0.0}), DomainError);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(g1()), Case::kCase2);
  EXPECT_EQ(classify({1.0, 1.2, 2.0, 3.0, 1.0}), Case::kCase1);
  EXPECT_EQ(classify({2.0, 0.5, 0.05, 0.5, 1.0}), Case::kCase3);
  EXPECT_EQ(classify({1.0, 2.0, 0.5, 1.0, 1.0}), Case::kCase4);
}

TEST(Classify, RatioLineBelowUnitBudgetIsNotCase4) {
  // Proportional strengths but x1 + x2 < 1.
  EXPECT_EQ(classify({1.0, 2.0, 0.2, 0.4, 1.0}), Case::kCase3);
}

TEST(OptimalSplit, Examples) {
  auto r = optimal_split(g1());
  EXPECT_EQ(r.case_label, Case::kCase2);
  EXPECT_NEAR(r.x_a1, 0.7905694150420949, 1e-15);  // sqrt(0.625)
  EXPECT_NEAR(r.x_a2, 1.0 - 0.7905694150420949, 1e-15);

  r = optimal_split({1.0, 1.2, 2.0, 3.0, 1.0});
  EXPECT_EQ(r.case_label, Case::kCase1);
  EXPECT_EQ(r.x_a1, 1.0);
  EXPECT_EQ(r.x_a2, 0.0);

  r = optimal_split({1.0, 2.0, 0.5, 1.0, 1.0});
  EXPECT_EQ(r.case_label, Case::kCase4);
  EXPECT_NEAR(r.x_a1, 1.0 / 3.0, 1e-15);
}

TEST(StagePayoffs, Examples) {
  auto p = stage_payoffs({1.0, 1.2, 2.0, 3.0, 1.0});
  EXPECT_EQ(p.u2, 1.2);

  p = stage_payoffs(g1());
  EXPECT_NEAR(p.u1, 0.5 * std::sqrt(0.4), 1e-15);
  EXPECT_NEAR(p.u2, 0.8 + 0.5 * std::sqrt(0.4), 1e-15);
  EXPECT_NEAR(p.u1 + p.u2 + p.u_adversary, 2.2, 1e-15);

  p = stage_payoffs({1.0, 2.0, 0.5, 1.0, 1.0});
  EXPECT_NEAR(p.alliance(), 2.0, 1e-12);
}

TEST(StagePayoffs, RejectsInvalidGame) {
  EXPECT_THROW(stage_payoffs({-1.0, 1.0, 1.0, 1.0, 1.0}), DomainError);
  EXPECT_THROW(stage_payoffs({1.0, 1.0, 0.0, 1.0, 1.0}), DomainError);
}

TEST(StagePayoffs, UnorientedGameMapsBack) {
  const GameParams mirror{1.2, 1.0, 1.5, 0.5, 1.0};
  const auto p = stage_payoffs(mirror);
  const auto q = stage_payoffs(g1());
  EXPECT_DOUBLE_EQ(p.u1, q.u2);
  EXPECT_DOUBLE_EQ(p.u2, q.u1);
  EXPECT_DOUBLE_EQ(p.u_adversary, q.u_adversary);
}

TEST(CheckProfile, RejectsViolations) {
  EXPECT_THROW(check_profile({0.5, 0.5, 0.5}, 1.0, 1.0), InconsistencyError);
  EXPECT_THROW(check_profile({1.5, 0.0, 0.5}, 1.0, 1.0), InconsistencyError);
  EXPECT_THROW(check_profile({-0.1, 0.6, 1.5}, 1.0, 1.0), InconsistencyError);
  const auto before = checked_profile_count();
  EXPECT_NO_THROW(check_profile({0.5, 0.5, 1.0}, 1.0, 1.0));
  EXPECT_EQ(checked_profile_count(), before + 1);
}

TEST(AdversaryResponseProperty, ExhaustiveAndFeasible) {
  testing::Sampler s(11);
  int seen[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 20000; ++i) {
    const GameParams g = normalize(s.game()).first;
    const AdversaryResponse r = optimal_split(g);
    ++seen[case_number(r.case_label)];
    EXPECT_GE(r.x_a1, 0.0);
    EXPECT_GE(r.x_a2, 0.0);
    EXPECT_DOUBLE_EQ(r.x_a1 + r.x_a2, 1.0);
  }
  EXPECT_GT(seen[1], 0);
  EXPECT_GT(seen[2], 0);
  EXPECT_GT(seen[3], 0);
}

TEST(AdversaryResponseProperty, ClosedFormBeatsEveryGridSplit) {
  testing::Sampler s(12);
  for (int i = 0; i < 500; ++i) {
    const GameParams g = normalize(s.game()).first;
    const AdversaryResponse r = optimal_split(g);
    const double closed = adversary_value(g, r.x_a1);
    const GridBest grid = enumerate_splits(g, 1000);
    EXPECT_LE(grid.value, closed + 1e-12) << "case " << to_string(r.case_label);
    EXPECT_GE(closed - grid.value, -1e-12);
    EXPECT_LE(closed - grid.value, grid.slack + 1e-12);
  }
}

TEST(AdversaryResponseProperty, Case4AllianceIndifferentToAdmissibleSplit) {
  testing::Sampler s(13);
  for (int i = 0; i < 100; ++i) {
    const double x1 = s.uniform(0.1, 3.0);
    const double x2 = std::max(s.uniform(0.1, 3.0), 1.05 - x1);
    const double phi1 = s.log_uniform(0.1, 5.0);
    const GameParams g{phi1, phi1 * x2 / x1, x1, x2, 1.0};
    ASSERT_EQ(classify(g), Case::kCase4);
    const double lo = std::max(0.0, 1.0 - x2);
    const double hi = std::min(1.0, x1);
    const double ref = adversary_value(g, lo);
    for (int k = 0; k <= 100; ++k) {
      const double a = lo + (hi - lo) * k / 100.0;
      EXPECT_NEAR(adversary_value(g, a), ref, 1e-9);
    }
  }
}

TEST(AdversaryResponseProperty, ContinuousAcrossCase2Case3Boundary) {
  testing::Sampler s(14);
  for (int i = 0; i < 200; ++i) {
    const double x2 = s.uniform(0.05, 0.9);
    const double x1 = s.uniform(0.01, 1.0 - x2);
    const double phi1 = s.log_uniform(0.1, 5.0);
    // Makes 1 - sqrt(phi1 x1 x2 / phi2) == x2.
    const double phi2 = phi1 * x1 * x2 / ((1.0 - x2) * (1.0 - x2));
    const GameParams lo{phi1, phi2 * (1.0 - 1e-9), x1, x2, 1.0};
    const GameParams hi{phi1, phi2 * (1.0 + 1e-9), x1, x2, 1.0};
    const auto rl = optimal_split(lo);
    const auto rh = optimal_split(hi);
    EXPECT_NE(rl.case_label, rh.case_label);
    EXPECT_NEAR(rl.x_a1, rh.x_a1, 1e-7);
    EXPECT_NEAR(stage_payoffs(lo).u_adversary, stage_payoffs(hi).u_adversary,
                1e-7);
  }
}

}  // namespace
}  // namespace colotto
