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

#ifndef COLOTTO_ORACLE_HPP_
#define COLOTTO_ORACLE_HPP_

// Brute-force ground truth for the coalitional game. Everything here is
// computed by enumeration on top of lotto_core; this library must not link
// against adversary_response or transfer_engine.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colotto/game.hpp"

namespace colotto::oracle {

struct OracleConfig {
  double tau_step = 1e-4;
  double split_step = 1e-3;
  double tolerance = 1e-9;
  unsigned threads = 1;
};

// Best adversary split found on the grid x_a1 in {0, h, 2h, ..., 1}
// (fractions of the adversary budget). Ties go to the smallest x_a1.
// The *_slack fields bound how far each payoff can move over one grid step
// around the argmax (largest adjacent difference).
struct GridResponse {
  double x_a1 = 0.0;
  double adversary_payoff = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  double u1_slack = 0.0;
  double u2_slack = 0.0;
  double adversary_slack = 0.0;
};

GridResponse adversary_grid_best_response(const GameParams& induced,
                                          double split_step);

// Values asserted by a closed-form analysis, compared by transfer_grid_scan.
// All tau values are in the scanned game's frame and must lie on the tau
// grid where noted.
struct ClosedFormClaims {
  bool check_mb = true;
  bool mb_exists = false;
  double mb_best_tau = 0.0;  // grid-aligned tau of the largest claimed gain
  double mb_best_margin = 0.0;  // min(du1, du2) claimed at mb_best_tau

  bool check_alliance = true;
  double alliance_tau = 0.0;
  double alliance_value = 0.0;

  bool check_split = true;
  bool split_unique = true;  // false when the adversary is indifferent
  double x_a1_at_zero = 0.0;
  double adversary_payoff_at_zero = 0.0;

  // Flag mutually beneficial transfers with tau > 0 (oriented games only).
  bool check_direction = true;
};

struct Disagreement {
  std::string quantity;
  double closed_form_value = 0.0;
  double grid_value = 0.0;
  double allowed_slack = 0.0;
};

struct OracleReport {
  std::size_t tau_points = 0;
  // Some tau gives both players a gain larger than the grid's resolution.
  bool mb_exists_grid = false;
  std::optional<double> best_mutual_tau;
  double best_mutual_margin = 0.0;
  // Largest gain margin found at tau > 0, net of grid slack.
  double positive_tau_margin = 0.0;
  double alliance_argmax_tau = 0.0;
  double alliance_max = 0.0;
  double alliance_at_zero = 0.0;
  double x_a1_at_zero = 0.0;
  double adversary_payoff_at_zero = 0.0;
  std::vector<Disagreement> disagreements;
};

// Scans tau = k * tau_step over (-x2, x1) in the game's own frame. Each
// point uses adversary_grid_best_response on the induced game. Results are
// identical for any thread count.
OracleReport transfer_grid_scan(const GameParams& g, double beta,
                                const OracleConfig& cfg,
                                const ClosedFormClaims* claims = nullptr);

// The tau grid used by transfer_grid_scan, for callers that need to align
// closed-form evaluations with it.
std::vector<double> tau_grid(const GameParams& g, double tau_step);

}  // namespace colotto::oracle

#endif  // COLOTTO_ORACLE_HPP_
