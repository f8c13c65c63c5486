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

#ifndef COLOTTO_ADVERSARY_RESPONSE_HPP_
#define COLOTTO_ADVERSARY_RESPONSE_HPP_

#include <cstdint>
#include <string_view>
#include <utility>

#include "colotto/game.hpp"

namespace colotto {

enum class Case : std::uint8_t { kCase1 = 1, kCase2 = 2, kCase3 = 3, kCase4 = 4 };

std::string_view to_string(Case c) noexcept;
inline int case_number(Case c) noexcept { return static_cast<int>(c); }

struct AdversaryResponse {
  Case case_label = Case::kCase1;
  double x_a1 = 1.0;
  double x_a2 = 0.0;
};


// Relative width of the band around phi2 * x1 == phi1 * x2 that is treated
// as the proportional-strength regime (Case 4).
inline constexpr double kCase4RelTolerance = 1e-9;

// Throws DomainError naming the first nonpositive or nonfinite field.
void validate(const GameParams& g);

// True when phi2 / phi1 <= x2 / x1 (compared as phi2 * x1 <= phi1 * x2).
bool is_oriented(const GameParams& g) noexcept;

// True when phi2 * x1 and phi1 * x2 agree within kCase4RelTolerance.
bool on_ratio_line(const GameParams& g) noexcept;

// Exchanges the indices of the two players.
GameParams swap_players(const GameParams& g) noexcept;

// Divides all budgets by the adversary budget and swaps the players if
// needed so the result has adversary_budget == 1 and is oriented.
std::pair<GameParams, Orientation> normalize(const GameParams& raw);

// Table of the adversary's best division for a normalized, oriented game:
//
//   Case 4  phi2/phi1 == x2/x1 and x1 + x2 >= 1      (checked first)
//   Case 1  phi2/phi1 <= x1 * x2                      x_a1 = 1
//   Case 2  0 < 1 - sqrt(phi1 x1 x2 / phi2) <= x2     x_a1 = sqrt(phi1 x1 x2 / phi2)
//   Case 3  1 - sqrt(phi1 x1 x2 / phi2) > x2          x_a1 ~ sqrt(phi1 x1)
//
// In Case 4 the adversary is indifferent between all splits with
// x_a_i <= x_i; optimal_split returns the proportional split
// x_a_i = x_i / (x1 + x2) as a convention.
Case classify(const GameParams& g);
AdversaryResponse optimal_split(const GameParams& g);

// Equilibrium payoffs once the adversary has best-responded. Accepts any
// normalized game: an unoriented game is evaluated in the swapped frame and
// mapped back, so u1 always belongs to the caller's player 1.
PayoffProfile stage_payoffs(const GameParams& g);

// Conservation and per-player bound check applied to every profile produced
// by stage_payoffs. Throws InconsistencyError on violation.
void check_profile(const PayoffProfile& p, double phi1, double phi2);

// Number of profiles that have passed check_profile in this process.
std::uint64_t checked_profile_count() noexcept;

}  // namespace colotto

#endif  // COLOTTO_ADVERSARY_RESPONSE_HPP_
