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

#include "colotto/sweep.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "colotto/errors.hpp"

namespace colotto::sweep {
namespace {

const std::set<std::string>& known_parameters() {
  static const std::set<std::string> names{"phi1", "phi2", "x1", "x2",
                                           "adversary_budget"};
  return names;
}

double require_fixed(const SweepGrid& grid, const std::string& name) {
  auto it = grid.fixed.find(name);
  if (it == grid.fixed.end()) {
    throw ConfigError("region raster needs fixed parameter " + name);
  }
  return it->second;
}

void validate_betas(const std::vector<double>& betas) {
  if (betas.empty()) throw ConfigError("beta list is empty");
  for (double b : betas) {
    if (!(b > 0.0 && b <= 1.0)) {
      std::ostringstream os;
      os << "beta must lie in (0, 1], got " << b;
      throw ConfigError(os.str());
    }
  }
}

}  // namespace

double Axis::value(int i) const {
  if (i == steps - 1) return upper;
  return lower + (upper - lower) * static_cast<double>(i) /
                     static_cast<double>(steps - 1);
}

void validate(const SweepGrid& grid) {
  if (grid.axes.empty() || grid.axes.size() > 2) {
    throw ConfigError("a sweep has one or two axes");
  }
  std::set<std::string> seen;
  for (const Axis& a : grid.axes) {
    if (!known_parameters().count(a.name)) {
      throw ConfigError("unknown swept parameter " + a.name);
    }
    if (!seen.insert(a.name).second) {
      throw ConfigError("parameter swept twice: " + a.name);
    }
    if (a.steps < 2) throw ConfigError("axis " + a.name + " needs steps >= 2");
    if (!(a.lower < a.upper)) {
      throw ConfigError("axis " + a.name + " needs lower < upper");
    }
  }
  for (const auto& [name, value] : grid.fixed) {
    if (!known_parameters().count(name)) {
      throw ConfigError("unknown fixed parameter " + name);
    }
    if (seen.count(name)) {
      throw ConfigError("parameter both swept and fixed: " + name);
    }
  }
  validate_betas(grid.beta_list);
}

std::vector<SweepCell> region_raster(const SweepGrid& grid) {
  validate(grid);
  const Axis* ax1 = nullptr;
  const Axis* ax2 = nullptr;
  for (const Axis& a : grid.axes) {
    if (a.name == "x1") ax1 = &a;
    if (a.name == "x2") ax2 = &a;
  }
  if (ax1 == nullptr || ax2 == nullptr) {
    throw ConfigError("region raster sweeps x1 and x2");
  }
  if (ax1->lower <= 0.0 || ax2->lower <= 0.0) {
    throw ConfigError("budget axes must stay positive");
  }
  GameParams base;
  base.phi1 = require_fixed(grid, "phi1");
  base.phi2 = require_fixed(grid, "phi2");
  if (auto it = grid.fixed.find("adversary_budget"); it != grid.fixed.end()) {
    base.adversary_budget = it->second;
  }
  try {
    validate(base);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  std::vector<SweepCell> cells;
  cells.reserve(grid.beta_list.size() * ax1->steps * ax2->steps);
  for (double beta : grid.beta_list) {
    for (int j = 0; j < ax2->steps; ++j) {
      for (int i = 0; i < ax1->steps; ++i) {
        SweepCell cell;
        cell.beta = beta;
        cell.x1 = ax1->value(i);
        cell.x2 = ax2->value(j);
        GameParams g = base;
        g.x1 = cell.x1;
        g.x2 = cell.x2;
        if (is_oriented(g)) {
          const GameParams n = normalize(g).first;
          CellAnalysis a;
          a.case_label = classify(n);
          a.mb_exists = mb_exists(g, beta);
          a.mb_beta_threshold = mb_beta_threshold(g);
          const AllianceOptimum opt = alliance_optimal(g, beta);
          a.tau_dagger = opt.tau;
          a.alliance_gain = opt.gain;
          cell.analysis = a;
        }
        cells.push_back(cell);
      }
    }
  }
  return cells;
}

std::vector<CurveRow> payoff_curves(const GameParams& g, double beta,
                                    double tau_min, double tau_max,
                                    int steps) {
  validate(g);
  if (steps < 2) throw ConfigError("curve needs steps >= 2");
  if (!(tau_min < tau_max)) throw ConfigError("curve needs tau_min < tau_max");
  // Both endpoints go through the transfer domain check.
  validate(g, Transfer{tau_min, beta});
  validate(g, Transfer{tau_max, beta});

  const PayoffProfile u0 = payoffs_at(g, {0.0, beta});
  const Axis axis{"tau", tau_min, tau_max, steps};
  std::vector<CurveRow> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double tau = axis.value(i);
    const PayoffProfile u = payoffs_at(g, {tau, beta});
    rows.push_back({tau, u.u1 - u0.u1, u.u2 - u0.u2, u.alliance()});
  }
  return rows;
}

std::vector<BetaRow> beta_sweep(const GameParams& g, double beta_min,
                                double beta_max, int steps, int tau_samples) {
  validate(g);
  if (steps < 2) throw ConfigError("beta sweep needs steps >= 2");
  if (tau_samples < 2) throw ConfigError("beta sweep needs tau_samples >= 2");
  if (!(beta_min > 0.0 && beta_max <= 1.0 && beta_min < beta_max)) {
    throw DomainError("beta range must satisfy 0 < beta_min < beta_max <= 1");
  }

  std::vector<double> base_taus;
  base_taus.reserve(tau_samples + 1);
  const double span = g.x1 + g.x2;
  for (int i = 1; i <= tau_samples; ++i) {
    base_taus.push_back(-g.x2 + span * i / (tau_samples + 1.0));
  }
  base_taus.push_back(0.0);

  const Axis axis{"beta", beta_min, beta_max, steps};
  std::vector<BetaRow> rows;
  rows.reserve(steps);
  for (int s = 0; s < steps; ++s) {
    const double beta = axis.value(s);
    BetaRow row;
    row.beta = beta;
    row.nominal = payoffs_at(g, {0.0, beta});
    row.mb_flag = mb_exists(g, beta);
    row.alliance_flag = !in_g_dagger(g, beta);

    const AllianceOptimum opt = alliance_optimal(g, beta);
    row.tau_dagger = opt.tau;
    const PayoffProfile at_dagger = payoffs_at(g, {opt.tau, beta});
    row.u1_at_dagger = at_dagger.u1;
    row.u2_at_dagger = at_dagger.u2;

    std::vector<double> taus = base_taus;
    taus.push_back(opt.tau);
    if (auto in = mb_interval(g, beta)) {
      for (int k = 0; k <= 64; ++k) {
        const double t = in->low + (in->high - in->low) * k / 64.0;
        if (t > -g.x2 && t < g.x1) taus.push_back(t);
      }
    }

    row.max_u1 = row.max_u1_free = row.nominal.u1;
    row.max_u2 = row.max_u2_free = row.nominal.u2;
    row.max_u12 = row.nominal.alliance();
    const double eps = 1e-12;
    for (double tau : taus) {
      const PayoffProfile u = payoffs_at(g, {tau, beta});
      row.max_u1_free = std::max(row.max_u1_free, u.u1);
      row.max_u2_free = std::max(row.max_u2_free, u.u2);
      row.max_u12 = std::max(row.max_u12, u.alliance());
      if (u.u2 >= row.nominal.u2 - eps) row.max_u1 = std::max(row.max_u1, u.u1);
      if (u.u1 >= row.nominal.u1 - eps) row.max_u2 = std::max(row.max_u2, u.u2);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace colotto::sweep
