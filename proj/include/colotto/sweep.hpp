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

#ifndef COLOTTO_SWEEP_HPP_
#define COLOTTO_SWEEP_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colotto/adversary_response.hpp"
#include "colotto/transfer_engine.hpp"

namespace colotto::sweep {

// Evenly spaced samples lower, ..., upper of one game parameter.
struct Axis {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
  int steps = 2;

  double value(int i) const;
};

struct SweepGrid {
  std::vector<Axis> axes;
  std::map<std::string, double> fixed;
  std::vector<double> beta_list;
};

// Throws ConfigError on steps < 2, lower >= upper, unknown parameter names,
// or overlap between swept and fixed parameters.
void validate(const SweepGrid& grid);

struct CellAnalysis {
  Case case_label = Case::kCase1;
  bool mb_exists = false;
  double tau_dagger = 0.0;
  double mb_beta_threshold = 0.0;
  double alliance_gain = 0.0;
};

// One (beta, x1, x2) sample. Cells outside the oriented half
// (phi2 / phi1 > x2 / x1) carry no analysis.
struct SweepCell {
  double beta = 1.0;
  double x1 = 0.0;
  double x2 = 0.0;
  std::optional<CellAnalysis> analysis;

  bool in_frame() const noexcept { return analysis.has_value(); }
};

// Requires axes named x1 and x2 and fixed phi1, phi2 (adversary_budget
// optional, default 1). Cells are ordered beta outermost, then x2, then x1.
std::vector<SweepCell> region_raster(const SweepGrid& grid);

struct CurveRow {
  double tau = 0.0;
  double du1 = 0.0;
  double du2 = 0.0;
  double u12 = 0.0;
};

// `steps` evenly spaced transfers from tau_min to tau_max inclusive; both
// must lie inside (-x2, x1).
std::vector<CurveRow> payoff_curves(const GameParams& g, double beta,
                                    double tau_min, double tau_max, int steps);

struct BetaRow {
  double beta = 1.0;
  // Each player's best payoff over transfers that leave the other player
  // no worse than nominal.
  double max_u1 = 0.0;
  double max_u2 = 0.0;
  double max_u12 = 0.0;
  // Unconstrained maxima over the same transfers.
  double max_u1_free = 0.0;
  double max_u2_free = 0.0;
  // Payoffs at the alliance optimal transfer.
  double u1_at_dagger = 0.0;
  double u2_at_dagger = 0.0;
  double tau_dagger = 0.0;
  PayoffProfile nominal;
  bool mb_flag = false;
  bool alliance_flag = false;
};

// Per beta in `steps` evenly spaced values over [beta_min, beta_max]. The
// maxima are taken over `tau_samples` evenly spaced interior transfers plus
// zero, the alliance optimum and the mutual-benefit interval.
std::vector<BetaRow> beta_sweep(const GameParams& g, double beta_min,
                                double beta_max, int steps,
                                int tau_samples = 2001);

}  // namespace colotto::sweep

#endif  // COLOTTO_SWEEP_HPP_
