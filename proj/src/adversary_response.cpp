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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include "colotto/errors.hpp"
#include "colotto/lotto_core.hpp"

namespace colotto {
namespace {

std::atomic<std::uint64_t> g_checked_profiles{0};

void require_positive(const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << name << " must be finite and > 0, got " << v;
    throw DomainError(os.str());
  }
}

// Profile for an oriented, normalized game.
PayoffProfile oriented_payoffs(const GameParams& g) {
  const AdversaryResponse r = optimal_split(g);
  PayoffProfile p;
  p.u1 = player_payoff(g.x1, r.x_a1, g.phi1);
  p.u2 = player_payoff(g.x2, r.x_a2, g.phi2);
  p.u_adversary = g.phi1 + g.phi2 - p.u1 - p.u2;
  return p;
}

}  // namespace

std::string_view to_string(Case c) noexcept {
  switch (c) {
    case Case::kCase1: return "Case1";
    case Case::kCase2: return "Case2";
    case Case::kCase3: return "Case3";
    case Case::kCase4: return "Case4";
  }
  return "Case?";
}

void validate(const GameParams& g) {
  require_positive("phi1", g.phi1);
  require_positive("phi2", g.phi2);
  require_positive("x1", g.x1);
  require_positive("x2", g.x2);
  require_positive("adversary_budget", g.adversary_budget);
}

bool is_oriented(const GameParams& g) noexcept {
  return g.phi2 * g.x1 <= g.phi1 * g.x2;
}

bool on_ratio_line(const GameParams& g) noexcept {
  const double lhs = g.phi2 * g.x1;
  const double rhs = g.phi1 * g.x2;
  return std::abs(lhs - rhs) <= kCase4RelTolerance * std::max(lhs, rhs);
}

GameParams swap_players(const GameParams& g) noexcept {
  return {g.phi2, g.phi1, g.x2, g.x1, g.adversary_budget};
}

std::pair<GameParams, Orientation> normalize(const GameParams& raw) {
  validate(raw);
  GameParams g = raw;
  g.x1 /= raw.adversary_budget;
  g.x2 /= raw.adversary_budget;
  g.adversary_budget = 1.0;
  Orientation o;
  if (!is_oriented(g)) {
    g = swap_players(g);
    o.swapped = true;
  }
  return {g, o};
}

Case classify(const GameParams& g) {
  if (on_ratio_line(g) && g.x1 + g.x2 >= 1.0) return Case::kCase4;
  if (g.phi2 <= g.phi1 * g.x1 * g.x2) return Case::kCase1;
  const double slack = 1.0 - std::sqrt(g.phi1 * g.x1 * g.x2 / g.phi2);
  return slack <= g.x2 ? Case::kCase2 : Case::kCase3;
}

AdversaryResponse optimal_split(const GameParams& g) {
  AdversaryResponse r;
  r.case_label = classify(g);
  switch (r.case_label) {
    case Case::kCase1:
      r.x_a1 = 1.0;
      break;
    case Case::kCase2:
      r.x_a1 = std::sqrt(g.phi1 * g.x1 * g.x2 / g.phi2);
      break;
    case Case::kCase3: {
      const double s1 = std::sqrt(g.phi1 * g.x1);
      const double s2 = std::sqrt(g.phi2 * g.x2);
      r.x_a1 = s1 / (s1 + s2);
      break;
    }
    case Case::kCase4:
      r.x_a1 = g.x1 / (g.x1 + g.x2);
      break;
  }
  r.x_a1 = std::clamp(r.x_a1, 0.0, 1.0);
  r.x_a2 = 1.0 - r.x_a1;
  return r;
}

PayoffProfile stage_payoffs(const GameParams& g) {
  validate(g);
  PayoffProfile p;
  if (is_oriented(g)) {
    p = oriented_payoffs(g);
  } else {
    const PayoffProfile q = oriented_payoffs(swap_players(g));
    p = {q.u2, q.u1, q.u_adversary};
  }
  check_profile(p, g.phi1, g.phi2);
  return p;
}

void check_profile(const PayoffProfile& p, double phi1, double phi2) {
  const double total = phi1 + phi2;
  const double tol = 1e-12 * std::max(1.0, total);
  const bool conserved =
      std::abs(p.u1 + p.u2 + p.u_adversary - total) <= tol;
  const bool bounded = p.u1 >= -tol && p.u1 <= phi1 + tol && p.u2 >= -tol &&
                       p.u2 <= phi2 + tol;
  if (!conserved || !bounded) {
    std::ostringstream os;
    os.precision(17);
    os << "payoff profile violates conservation or bounds: u1=" << p.u1
       << " u2=" << p.u2 << " uA=" << p.u_adversary << " phi1=" << phi1
       << " phi2=" << phi2;
    throw InconsistencyError(os.str());
  }
  g_checked_profiles.fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t checked_profile_count() noexcept {
  return g_checked_profiles.load(std::memory_order_relaxed);
}

}  // namespace colotto
