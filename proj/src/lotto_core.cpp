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

#include <cmath>
#include <sstream>

#include "colotto/errors.hpp"

namespace colotto {

LottoPayoff equilibrium_payoff(const LottoInstance& inst) {
  if (!(inst.player_budget >= 0.0) || !std::isfinite(inst.player_budget)) {
    std::ostringstream os;
    os << "player_budget must be finite and >= 0, got " << inst.player_budget;
    throw DomainError(os.str());
  }
  if (!(inst.adversary_budget >= 0.0) ||
      !std::isfinite(inst.adversary_budget)) {
    std::ostringstream os;
    os << "adversary_budget must be finite and >= 0, got "
       << inst.adversary_budget;
    throw DomainError(os.str());
  }
  if (!(inst.total_value > 0.0) || !std::isfinite(inst.total_value)) {
    std::ostringstream os;
    os << "total_value must be finite and > 0, got " << inst.total_value;
    throw DomainError(os.str());
  }
  const double player = player_payoff(inst.player_budget,
                                      inst.adversary_budget, inst.total_value);
  return {player, inst.total_value - player};
}

}  // namespace colotto
