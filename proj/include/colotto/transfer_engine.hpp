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

#ifndef COLOTTO_TRANSFER_ENGINE_HPP_
#define COLOTTO_TRANSFER_ENGINE_HPP_

#include <optional>
#include <string_view>

#include "colotto/adversary_response.hpp"

namespace colotto {

// A net budget transfer tau from player 1 to player 2 (negative: player 2
// sends to player 1). The recipient receives beta * |tau|.
struct Transfer {
  double tau = 0.0;
  double beta = 1.0;
};

struct PostTransferBudgets {
  double x1_bar = 0.0;
  double x2_bar = 0.0;
};

struct PayoffDelta {
  double du1 = 0.0;
  double du2 = 0.0;
};

// Open tau interval on which both players strictly gain. `disconnected` is
// set if a second mutually beneficial stretch was seen further out; the
// interval adjacent to zero is the one returned. `unresolved` is set when
// the gains are too small to resolve in double precision and the interval
// is only a lower bound on the true one.
struct TauInterval {
  double low = 0.0;
  double high = 0.0;
  bool disconnected = false;
  bool unresolved = false;
};

enum class AllianceStop {
  kInGDagger,   // zero transfer is already alliance optimal
  kStationary,  // interior root of the alliance payoff derivative
  kCaseBoundary,  // a case boundary where the next region turns unprofitable
  kProportional,  // induced game reached the proportional-strength line
};

std::string_view to_string(AllianceStop s) noexcept;

struct AllianceOptimum {
  double tau = 0.0;
  double gain = 0.0;
  AllianceStop stop = AllianceStop::kInGDagger;
};

struct TransferAnalysis {
  GameParams normalized;  // oriented, adversary budget 1
  Orientation orientation;
  double beta = 1.0;
  Case case_at_zero = Case::kCase1;
  PayoffProfile nominal;
  bool mb_exists = false;
  std::optional<TauInterval> mb_interval;
  double mb_beta_threshold = 0.0;
  // beta above which a mutually beneficial transfer exists for this game's
  // case; +inf for Cases 1 and 4.
  double mb_case_threshold = 0.0;
  // beta above which the alliance optimal transfer is nonzero; 0 for Case 1
  // and +inf for Case 4.
  double alliance_beta_threshold = 0.0;
  double alliance_tau = 0.0;
  double alliance_payoff_gain = 0.0;
  AllianceStop alliance_stop = AllianceStop::kInGDagger;
  bool in_g_dagger = false;
};

inline constexpr double kBisectionTolerance = 1e-9;
inline constexpr int kBisectionMaxIterations = 200;

// All functions below accept raw games (any orientation, any adversary
// budget). Transfers and returned tau values are in the caller's frame and
// budget units.

// Throws DomainError unless -x2 < tau < x1 and 0 < beta <= 1.
void validate(const GameParams& g, const Transfer& t);

PostTransferBudgets apply_transfer(const GameParams& g, const Transfer& t);
PayoffProfile payoffs_at(const GameParams& g, const Transfer& t);
PayoffDelta delta_payoffs(const GameParams& g, const Transfer& t);
double alliance_payoff(const GameParams& g, const Transfer& t);

// min( sqrt(4 phi2 x1 / (phi1 x2^3)) - x1/x2,
//      sqrt(4 phi2 x1 / (phi1 x2)) + x1/x2 ), evaluated on the oriented,
// normalized game.
double mb_beta_threshold(const GameParams& g);

// The member of the pair above that governs the game's case: the first for
// Case 2, the second for Case 3, +inf for Cases 1 and 4.
double mb_case_threshold(const GameParams& g);

bool mb_exists(const GameParams& g, double beta);
std::optional<TauInterval> mb_interval(const GameParams& g, double beta);

bool in_g_dagger(const GameParams& g, double beta);
double alliance_beta_threshold(const GameParams& g);
AllianceOptimum alliance_optimal(const GameParams& g, double beta);

TransferAnalysis analyze(const GameParams& g, double beta);

}  // namespace colotto

#endif  // COLOTTO_TRANSFER_ENGINE_HPP_
