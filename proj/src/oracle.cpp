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

#include "colotto/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "colotto/errors.hpp"
#include "colotto/lotto_core.hpp"

namespace colotto::oracle {
namespace {

void require_positive(const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << name << " must be finite and > 0, got " << v;
    throw DomainError(os.str());
  }
}

void check_game(const GameParams& g) {
  require_positive("phi1", g.phi1);
  require_positive("phi2", g.phi2);
  require_positive("x1", g.x1);
  require_positive("x2", g.x2);
  require_positive("adversary_budget", g.adversary_budget);
}

long grid_count(double split_step) {
  if (!(split_step > 0.0) || split_step > 1.0) {
    throw ConfigError("split_step must lie in (0, 1]");
  }
  return std::lround(1.0 / split_step);
}

struct Fronts {
  double a1;
  double a2;
};

Fronts fronts(long k, long n, double budget) {
  const double f = static_cast<double>(k) / static_cast<double>(n);
  return {f * budget, (1.0 - f) * budget};
}

}  // namespace

GridResponse adversary_grid_best_response(const GameParams& induced,
                                          double split_step) {
  check_game(induced);
  const long n = grid_count(split_step);
  const double total = induced.phi1 + induced.phi2;
  auto eval = [&](long k, double& p1, double& p2) {
    const Fronts a = fronts(k, n, induced.adversary_budget);
    p1 = player_payoff(induced.x1, a.a1, induced.phi1);
    p2 = player_payoff(induced.x2, a.a2, induced.phi2);
  };

  long best = 0;
  double best_adv = -1.0;
  for (long k = 0; k <= n; ++k) {
    double p1, p2;
    eval(k, p1, p2);
    const double adv = total - p1 - p2;
    if (adv > best_adv) {
      best_adv = adv;
      best = k;
    }
  }

  GridResponse r;
  r.x_a1 = static_cast<double>(best) / static_cast<double>(n);
  eval(best, r.u1, r.u2);
  r.adversary_payoff = total - r.u1 - r.u2;
  for (long k : {best - 1, best + 1}) {
    if (k < 0 || k > n) continue;
    double p1, p2;
    eval(k, p1, p2);
    r.u1_slack = std::max(r.u1_slack, std::abs(p1 - r.u1));
    r.u2_slack = std::max(r.u2_slack, std::abs(p2 - r.u2));
    r.adversary_slack =
        std::max(r.adversary_slack, std::abs(total - p1 - p2 - best_adv));
  }
  return r;
}

std::vector<double> tau_grid(const GameParams& g, double tau_step) {
  const double eps_lo = 1e-12 * std::max(1.0, g.x2);
  const double eps_hi = 1e-12 * std::max(1.0, g.x1);
  const long kmin = static_cast<long>(std::ceil((-g.x2 + eps_lo) / tau_step));
  const long kmax = static_cast<long>(std::floor((g.x1 - eps_hi) / tau_step));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(kmax - kmin + 1));
  for (long k = kmin; k <= kmax; ++k) {
    out.push_back(static_cast<double>(k) * tau_step);
  }
  return out;
}

OracleReport transfer_grid_scan(const GameParams& g, double beta,
                                const OracleConfig& cfg,
                                const ClosedFormClaims* claims) {
  check_game(g);
  if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("beta must lie in (0, 1]");
  if (!(cfg.tau_step > 0.0) || !(cfg.tolerance > 0.0)) {
    throw ConfigError("tau_step and tolerance must be > 0");
  }
  if (!(cfg.tau_step < std::min(g.x1, g.x2))) {
    throw ConfigError("tau_step must be smaller than min(x1, x2)");
  }
  grid_count(cfg.split_step);

  const std::vector<double> taus = tau_grid(g, cfg.tau_step);
  const std::size_t n = taus.size();
  std::vector<GridResponse> rs(n);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double t = taus[i];
      GameParams gi = g;
      if (t > 0.0) {
        gi.x1 = g.x1 - t;
        gi.x2 = g.x2 + beta * t;
      } else {
        gi.x1 = g.x1 - beta * t;
        gi.x2 = g.x2 + t;
      }
      rs[i] = adversary_grid_best_response(gi, cfg.split_step);
    }
  };
  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    fill(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t b = std::min(n, w * chunk);
      const std::size_t e = std::min(n, b + chunk);
      pool.emplace_back(fill, b, e);
    }
    for (auto& th : pool) th.join();
  }

  auto index_of = [&](double tau) {
    const double k0 = std::round(tau / cfg.tau_step);
    const double kmin = std::round(taus.front() / cfg.tau_step);
    const long i = static_cast<long>(k0 - kmin);
    return static_cast<std::size_t>(
        std::clamp<long>(i, 0, static_cast<long>(n) - 1));
  };
  const std::size_t zero = index_of(0.0);
  const GridResponse& r0 = rs[zero];

  OracleReport rep;
  rep.tau_points = n;
  rep.alliance_at_zero = r0.u1 + r0.u2;
  rep.x_a1_at_zero = r0.x_a1;
  rep.adversary_payoff_at_zero = r0.adversary_payoff;
  rep.best_mutual_margin = -std::numeric_limits<double>::infinity();
  rep.positive_tau_margin = -std::numeric_limits<double>::infinity();
  rep.alliance_max = -std::numeric_limits<double>::infinity();

  std::size_t argmax = zero;
  for (std::size_t i = 0; i < n; ++i) {
    const GridResponse& r = rs[i];
    const double alliance = r.u1 + r.u2;
    if (alliance > rep.alliance_max) {
      rep.alliance_max = alliance;
      argmax = i;
    }
    if (i == zero) continue;
    const double du1 = r.u1 - r0.u1;
    const double du2 = r.u2 - r0.u2;
    const double s1 = r.u1_slack + r0.u1_slack + cfg.tolerance;
    const double s2 = r.u2_slack + r0.u2_slack + cfg.tolerance;
    const double net = std::min(du1 - s1, du2 - s2);
    const double margin = std::min(du1, du2);
    if (net > 0.0) {
      if (!rep.mb_exists_grid || margin > rep.best_mutual_margin) {
        rep.best_mutual_margin = margin;
        rep.best_mutual_tau = taus[i];
      }
      rep.mb_exists_grid = true;
    } else if (!rep.mb_exists_grid) {
      rep.best_mutual_margin = std::max(rep.best_mutual_margin, margin);
    }
    if (taus[i] > 0.0) {
      rep.positive_tau_margin = std::max(rep.positive_tau_margin, net);
    }
  }
  rep.alliance_argmax_tau = taus[argmax];

  if (claims == nullptr) return rep;
  const ClosedFormClaims& c = *claims;
  auto flag = [&](const char* what, double cf, double grid, double slack) {
    rep.disagreements.push_back({what, cf, grid, slack});
  };

  if (c.check_mb) {
    if (!c.mb_exists && rep.mb_exists_grid) {
      flag("mb_exists", 0.0, 1.0, 0.0);
    }
    if (c.mb_exists) {
      const GridResponse& r = rs[index_of(c.mb_best_tau)];
      const double m = std::min(r.u1 - r0.u1, r.u2 - r0.u2);
      const double slack = std::max(r.u1_slack + r0.u1_slack,
                                    r.u2_slack + r0.u2_slack) +
                           cfg.tolerance;
      if (std::abs(m - c.mb_best_margin) > slack) {
        flag("mb_margin", c.mb_best_margin, m, slack);
      }
    }
  }
  if (c.check_direction && rep.positive_tau_margin > 0.0) {
    flag("positive_mutual_tau", 0.0, rep.positive_tau_margin, 0.0);
  }
  if (c.check_alliance) {
    const double upper = rs[argmax].adversary_slack + cfg.tolerance;
    if (rep.alliance_max - c.alliance_value > upper) {
      flag("alliance_value_upper", c.alliance_value, rep.alliance_max, upper);
    }
    const std::size_t k = index_of(c.alliance_tau);
    const double here = rs[k].u1 + rs[k].u2;
    double lower = cfg.tolerance;
    for (std::size_t j : {k - 1, k + 1}) {
      if (j >= n) continue;
      lower = std::max(lower, std::abs(rs[j].u1 + rs[j].u2 - here) +
                                  cfg.tolerance);
    }
    if (c.alliance_value - here > lower) {
      flag("alliance_value_lower", c.alliance_value, here, lower);
    }
  }
  if (c.check_split) {
    if (r0.adversary_payoff - c.adversary_payoff_at_zero > cfg.tolerance) {
      flag("adversary_payoff_upper", c.adversary_payoff_at_zero,
           r0.adversary_payoff, cfg.tolerance);
    }
    const double low_slack = r0.adversary_slack + cfg.tolerance;
    if (c.adversary_payoff_at_zero - r0.adversary_payoff > low_slack) {
      flag("adversary_payoff_lower", c.adversary_payoff_at_zero,
           r0.adversary_payoff, low_slack);
    }
    if (c.split_unique &&
        std::abs(r0.x_a1 - c.x_a1_at_zero) > cfg.split_step + cfg.tolerance) {
      flag("adversary_split", c.x_a1_at_zero, r0.x_a1, cfg.split_step);
    }
  }
  return rep;
}

}  // namespace colotto::oracle
