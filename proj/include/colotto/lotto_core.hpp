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

#ifndef COLOTTO_LOTTO_CORE_HPP_
#define COLOTTO_LOTTO_CORE_HPP_

namespace colotto {

// A single two-agent General Lotto game: one player against the adversary
// over contests whose valuations sum to total_value.
struct LottoInstance {
  double player_budget = 0.0;
  double adversary_budget = 0.0;
  double total_value = 1.0;
};

struct LottoPayoff {
  double player = 0.0;
  double adversary = 0.0;
};

// Equilibrium payoffs of a General Lotto game.
//
//   X <= X_A :  player = phi * X / (2 X_A)
//   X >  X_A :  player = phi * (1 - X_A / (2 X))
//
// and adversary = phi - player. The player wins ties, so two zero budgets
// give the player everything. Throws DomainError on negative budgets or a
// nonpositive total value.
LottoPayoff equilibrium_payoff(const LottoInstance& inst);

// Unchecked form of the player's payoff for inner loops. Same formulas and
// tie rule as equilibrium_payoff; arguments must already be valid.
inline double player_payoff(double player_budget, double adversary_budget,
                            double total_value) noexcept {
  if (player_budget <= adversary_budget) {
    if (adversary_budget <= 0.0) return total_value;
    return total_value * player_budget / (2.0 * adversary_budget);
  }
  return total_value * (1.0 - adversary_budget / (2.0 * player_budget));
}

}  // namespace colotto

#endif  // COLOTTO_LOTTO_CORE_HPP_
