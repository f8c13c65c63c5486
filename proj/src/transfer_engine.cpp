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

#include "colotto/transfer_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "colotto/errors.hpp"

namespace colotto {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// A raw game viewed in its oriented, normalized frame.
struct Frame {
  GameParams g;
  Orientation o;
  double scale = 1.0;

  double to_raw(double tau) const { return (o.swapped ? -tau : tau) * scale; }
};

Frame make_frame(const GameParams& raw) {
  auto [g, o] = normalize(raw);
  return {g, o, raw.adversary_budget};
}

void validate_beta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    std::ostringstream os;
    os << "beta must lie in (0, 1], got " << beta;
    throw DomainError(os.str());
  }
}

PostTransferBudgets shift_budgets(double x1, double x2, double tau,
                                  double beta) noexcept {
  if (tau > 0.0) return {x1 - tau, x2 + beta * tau};
  return {x1 - beta * tau, x2 + tau};
}

GameParams induced_game(const GameParams& g, double tau, double beta) {
  const PostTransferBudgets b = shift_budgets(g.x1, g.x2, tau, beta);
  return {g.phi1, g.phi2, b.x1_bar, b.x2_bar, 1.0};
}

// Payoffs in the oriented frame; tau must already be inside the domain.
PayoffProfile frame_payoffs(const GameParams& g, double tau, double beta) {
  return stage_payoffs(induced_game(g, tau, beta));
}

double lowest_tau(const GameParams& g) {
  return -g.x2 + 1e-12 * std::max(1.0, g.x2);
}

// Negative tau samples ordered from zero outwards: a geometric run that
// resolves behaviour right next to zero followed by a uniform run.
std::vector<double> outward_samples(const GameParams& g) {
  const double lo = lowest_tau(g);
  std::vector<double> pts;
  pts.reserve(4096 + 97);
  for (int k = 96; k >= 1; --k) {
    pts.push_back(-g.x2 * std::pow(10.0, -k / 8.0));
  }
  for (int j = 1; j < 4096; ++j) pts.push_back(-g.x2 * j / 4096.0);
  pts.push_back(lo);
  for (double& t : pts) t = std::max(t, lo);
  std::sort(pts.begin(), pts.end(), std::greater<>());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Shrinks [inside, outside] around the point where `holds` switches from
// true (at `inside`) to false (at `outside`).
template <typename Pred>
double bisect_switch(double inside, double outside, Pred holds) {
  for (int it = 0; it < kBisectionMaxIterations &&
                   std::abs(inside - outside) > kBisectionTolerance;
       ++it) {
    const double mid = 0.5 * (inside + outside);
    if (holds(mid)) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return 0.5 * (inside + outside);
}

std::string describe(const GameParams& g, double beta) {
  std::ostringstream os;
  os.precision(17);
  os << "(phi1=" << g.phi1 << ", phi2=" << g.phi2 << ", x1=" << g.x1
     << ", x2=" << g.x2 << ", beta=" << beta << ")";
  return os.str();
}

// Residual of the alliance stationarity condition in the Case 2 region;
// positive means the alliance payoff still rises as tau decreases.
double case2_residual(const GameParams& g, double beta) {
  return g.x1 + beta * g.x2 - std::sqrt(g.phi2 * g.x1 / (g.phi1 * g.x2));
}

// Same for the Case 3 region.
double case3_residual(const GameParams& g, double beta) {
  return beta * g.phi1 - g.phi2 -
         std::sqrt(g.phi1 * g.phi2 / (g.x1 * g.x2)) * (g.x1 - beta * g.x2);
}

// Whether moving budget from player 2 to player 1 still raises the alliance
// payoff at the (oriented frame) induced game `gbar`.
bool alliance_rising(const GameParams& gbar, double beta) {
  if (!is_oriented(gbar) && !on_ratio_line(gbar)) return false;
  switch (classify(gbar)) {
    case Case::kCase1: return true;
    case Case::kCase2: return case2_residual(gbar, beta) > 0.0;
    case Case::kCase3: return case3_residual(gbar, beta) > 0.0;
    case Case::kCase4: return false;
  }
  return false;
}

bool frame_mb_exists(const GameParams& g, double beta) {
  return beta > mb_case_threshold(g);
}

std::optional<TauInterval> frame_mb_interval(const GameParams& g,
                                             double beta) {
  if (!frame_mb_exists(g, beta)) return std::nullopt;
  const PayoffProfile u0 = frame_payoffs(g, 0.0, beta);
  auto gains = [&](double tau) {
    const PayoffProfile u = frame_payoffs(g, tau, beta);
    return u.u1 - u0.u1 > 0.0 && u.u2 - u0.u2 > 0.0;
  };
  const std::vector<double> pts = outward_samples(g);
  std::size_t i = 0;
  while (i < pts.size() && !gains(pts[i])) ++i;
  if (i == pts.size()) {
    // Gains below double resolution: report the innermost sample.
    return TauInterval{pts.front(), 0.0, false, true};
  }
  std::size_t j = i + 1;
  while (j < pts.size() && gains(pts[j])) ++j;
  TauInterval out;
  out.high = 0.0;
  if (j == pts.size()) {
    out.low = pts.back();
    return out;
  }
  out.low = bisect_switch(pts[j - 1], pts[j], gains);
  for (std::size_t k = j + 1; k < pts.size(); ++k) {
    if (gains(pts[k])) {
      out.disconnected = true;
      break;
    }
  }
  return out;
}

bool frame_in_g_dagger(const GameParams& g, double beta) {
  switch (classify(g)) {
    case Case::kCase1: return false;
    case Case::kCase2: return case2_residual(g, beta) <= 0.0;
    case Case::kCase3: return case3_residual(g, beta) <= 0.0;
    case Case::kCase4: return true;
  }
  return false;
}

AllianceOptimum frame_alliance_optimal(const GameParams& g, double beta) {
  AllianceOptimum out;
  if (frame_in_g_dagger(g, beta)) return out;
  auto rising = [&](double tau) {
    return alliance_rising(induced_game(g, tau, beta), beta);
  };
  const std::vector<double> pts = outward_samples(g);
  double inside = 0.0;
  std::size_t k = 0;
  while (k < pts.size() && rising(pts[k])) inside = pts[k++];
  if (k == pts.size()) {
    throw InconsistencyError(
        "alliance payoff still rising at the edge of the transfer domain "
        "for game " + describe(g, beta));
  }
  out.tau = bisect_switch(inside, pts[k], rising);

  const GameParams before = induced_game(g, out.tau + kBisectionTolerance, beta);
  const GameParams after = induced_game(g, out.tau - kBisectionTolerance, beta);
  const bool proportional_after =
      !is_oriented(after) || classify(after) == Case::kCase4;
  if (proportional_after || on_ratio_line(before)) {
    out.stop = AllianceStop::kProportional;
  } else if (is_oriented(before) && classify(before) != classify(after)) {
    out.stop = AllianceStop::kCaseBoundary;
  } else {
    out.stop = AllianceStop::kStationary;
  }
  const double a0 = frame_payoffs(g, 0.0, beta).alliance();
  const double a1 = frame_payoffs(g, out.tau, beta).alliance();
  out.gain = std::max(0.0, a1 - a0);
  return out;
}

}  // namespace

std::string_view to_string(AllianceStop s) noexcept {
  switch (s) {
    case AllianceStop::kInGDagger: return "in_g_dagger";
    case AllianceStop::kStationary: return "stationary";
    case AllianceStop::kCaseBoundary: return "case_boundary";
    case AllianceStop::kProportional: return "proportional";
  }
  return "unknown";
}

void validate(const GameParams& g, const Transfer& t) {
  validate(g);
  validate_beta(t.beta);
  if (!(t.tau > -g.x2 && t.tau < g.x1)) {
    std::ostringstream os;
    os.precision(17);
    os << "tau must lie in the open interval (-x2, x1) = (" << -g.x2 << ", "
       << g.x1 << "), got " << t.tau;
    throw DomainError(os.str());
  }
}

PostTransferBudgets apply_transfer(const GameParams& g, const Transfer& t) {
  validate(g, t);
  return shift_budgets(g.x1, g.x2, t.tau, t.beta);
}

PayoffProfile payoffs_at(const GameParams& g, const Transfer& t) {
  const PostTransferBudgets b = apply_transfer(g, t);
  const double s = g.adversary_budget;
  return stage_payoffs({g.phi1, g.phi2, b.x1_bar / s, b.x2_bar / s, 1.0});
}

PayoffDelta delta_payoffs(const GameParams& g, const Transfer& t) {
  const PayoffProfile u = payoffs_at(g, t);
  const PayoffProfile u0 = payoffs_at(g, {0.0, t.beta});
  return {u.u1 - u0.u1, u.u2 - u0.u2};
}

double alliance_payoff(const GameParams& g, const Transfer& t) {
  return payoffs_at(g, t).alliance();
}

double mb_beta_threshold(const GameParams& raw) {
  const GameParams g = normalize(raw).first;
  const double r = g.x1 / g.x2;
  const double a = std::sqrt(4.0 * g.phi2 * g.x1 /
                             (g.phi1 * g.x2 * g.x2 * g.x2)) - r;
  const double b = std::sqrt(4.0 * g.phi2 * g.x1 / (g.phi1 * g.x2)) + r;
  return std::min(a, b);
}

double mb_case_threshold(const GameParams& raw) {
  const GameParams g = normalize(raw).first;
  const double r = g.x1 / g.x2;
  switch (classify(g)) {
    case Case::kCase2:
      return std::sqrt(4.0 * g.phi2 * g.x1 / (g.phi1 * g.x2 * g.x2 * g.x2)) -
             r;
    case Case::kCase3:
      return std::sqrt(4.0 * g.phi2 * g.x1 / (g.phi1 * g.x2)) + r;
    case Case::kCase1:
    case Case::kCase4:
      break;
  }
  return kInf;
}

bool mb_exists(const GameParams& g, double beta) {
  validate_beta(beta);
  return frame_mb_exists(normalize(g).first, beta);
}

std::optional<TauInterval> mb_interval(const GameParams& raw, double beta) {
  validate_beta(beta);
  const Frame f = make_frame(raw);
  auto in = frame_mb_interval(f.g, beta);
  if (!in) return std::nullopt;
  TauInterval out = *in;
  out.low = f.to_raw(in->low);
  out.high = f.to_raw(in->high);
  if (out.low > out.high) std::swap(out.low, out.high);
  return out;
}

bool in_g_dagger(const GameParams& g, double beta) {
  validate_beta(beta);
  return frame_in_g_dagger(normalize(g).first, beta);
}

double alliance_beta_threshold(const GameParams& raw) {
  const GameParams g = normalize(raw).first;
  switch (classify(g)) {
    case Case::kCase1:
      return 0.0;
    case Case::kCase2:
      return (std::sqrt(g.phi2 * g.x1 / (g.phi1 * g.x2)) - g.x1) / g.x2;
    case Case::kCase3: {
      const double k = std::sqrt(g.phi1 * g.phi2 / (g.x1 * g.x2));
      return (g.phi2 + k * g.x1) / (g.phi1 + k * g.x2);
    }
    case Case::kCase4:
      break;
  }
  return kInf;
}

AllianceOptimum alliance_optimal(const GameParams& raw, double beta) {
  validate_beta(beta);
  const Frame f = make_frame(raw);
  AllianceOptimum out = frame_alliance_optimal(f.g, beta);
  out.tau = out.stop == AllianceStop::kInGDagger ? 0.0 : f.to_raw(out.tau);
  return out;
}

TransferAnalysis analyze(const GameParams& raw, double beta) {
  validate_beta(beta);
  const Frame f = make_frame(raw);
  TransferAnalysis a;
  a.normalized = f.g;
  a.orientation = f.o;
  a.beta = beta;
  a.case_at_zero = classify(f.g);
  a.nominal = frame_payoffs(f.g, 0.0, beta);
  if (f.o.swapped) std::swap(a.nominal.u1, a.nominal.u2);
  a.mb_beta_threshold = mb_beta_threshold(raw);
  a.mb_case_threshold = mb_case_threshold(raw);
  a.alliance_beta_threshold = alliance_beta_threshold(raw);
  a.mb_exists = frame_mb_exists(f.g, beta);
  a.mb_interval = mb_interval(raw, beta);
  a.in_g_dagger = frame_in_g_dagger(f.g, beta);
  const AllianceOptimum opt = alliance_optimal(raw, beta);
  a.alliance_tau = opt.tau;
  a.alliance_payoff_gain = opt.gain;
  a.alliance_stop = opt.stop;
  return a;
}

}  // namespace colotto
