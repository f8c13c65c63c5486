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

#include "colotto/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "colotto/errors.hpp"
#include "colotto/report.hpp"
#include "colotto/sweep.hpp"
#include "colotto/transfer_engine.hpp"
#include "json.hpp"

namespace colotto::cli {
namespace {

using nlohmann::json;

// Runs a command body, mapping parameter errors to exit code 2.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const DomainError& e) {
    err << "invalid parameter: " << e.what() << "\n";
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << "\n";
  }
  return kExitInvalid;
}

// Key = value lines ('#' or ';' comments, [section] headers ignored).
std::vector<std::pair<std::string, std::string>> read_config(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::vector<std::pair<std::string, std::string>> out;
  for (std::string line; std::getline(in, line);) {
    line = trim(line.substr(0, line.find_first_of("#;")));
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("malformed config line: " + line);
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out.emplace_back(key, value);
  }
  return out;
}

// Splices the entries of a --config file in front of the command-line
// flags. Keys given on the command line are skipped.
void expand_config(std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path || args.empty()) return;
  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> extra;
  for (const auto& [key, value] : read_config(*path)) {
    const std::string flag = "--" + key;
    if (key == "config" || given(flag)) continue;
    if (value == "true") {
      extra.push_back(flag);
    } else if (value != "false") {
      extra.push_back(flag);
      std::istringstream words(value);
      for (std::string w; words >> w;) extra.push_back(w);
    }
  }
  args.insert(args.begin() + 1, extra.begin(), extra.end());
}

void write_row(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const std::string& c : cells) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

std::string flag(bool b) { return b ? "1" : "0"; }

// Uniform double in [0, 1) from the top 53 bits, identical on every
// standard library.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::log(lo) + unit(rng) * (std::log(hi) - std::log(lo)));
}

bool near_case_boundary(const GameParams& g, double margin) {
  if (std::abs(std::log(g.phi2 * g.x1 / (g.phi1 * g.x2))) < margin) return true;
  const double q = g.phi1 * g.x1 * g.x2 / g.phi2;
  if (std::abs(std::log(q)) < margin) return true;
  if (q < 1.0 && std::abs(1.0 - std::sqrt(q) - g.x2) < margin) return true;
  return false;
}

std::optional<GameParams> fixture(const std::string& name) {
  if (name == "fixed-g1") return GameParams{1.0, 1.2, 0.5, 1.5, 1.0};
  if (name == "fixed-case-1-game") return GameParams{1.0, 1.2, 2.0, 3.0, 1.0};
  if (name == "fixed-case-3-game") return GameParams{2.0, 0.5, 0.05, 0.5, 1.0};
  if (name == "fixed-case-4-game") return GameParams{1.0, 2.0, 0.5, 1.0, 1.0};
  return std::nullopt;
}

json game_json(const GameParams& g) {
  return {{"phi1", g.phi1}, {"phi2", g.phi2}, {"x1", g.x1}, {"x2", g.x2}};
}

// Closed-form values the oracle is asked to confirm for one (game, beta).
oracle::ClosedFormClaims claims_for(const GameParams& g, double beta,
                                    const TransferAnalysis& a,
                                    const std::vector<double>& taus,
                                    const VerifyOptions& o) {
  oracle::ClosedFormClaims c;
  c.check_mb = std::abs(beta - a.mb_case_threshold) >= o.threshold_band &&
               a.case_at_zero != Case::kCase4;
  c.mb_exists = a.mb_exists;
  const PayoffProfile u0 = payoffs_at(g, {0.0, beta});
  double best = -std::numeric_limits<double>::infinity();
  for (double t : taus) {
    if (t == 0.0) continue;
    const PayoffProfile u = payoffs_at(g, {t, beta});
    const double m = std::min(u.u1 - u0.u1, u.u2 - u0.u2);
    if (m > best) {
      best = m;
      c.mb_best_tau = t;
    }
  }
  c.mb_best_margin = best;

  c.check_alliance =
      std::abs(beta - a.alliance_beta_threshold) >= o.threshold_band;
  c.alliance_tau = a.alliance_tau;
  c.alliance_value = alliance_payoff(g, {a.alliance_tau, beta});

  const AdversaryResponse split = optimal_split(a.normalized);
  c.split_unique = split.case_label != Case::kCase4;
  c.x_a1_at_zero = split.x_a1;
  c.adversary_payoff_at_zero = u0.u_adversary;
  c.check_direction = true;
  return c;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const AnalysisReport r = make_report(o.game, o.beta);
    if (o.text) {
      out << to_text(r);
    } else {
      out << to_json(r).dump(2) << "\n";
    }
    return kExitOk;
  });
}

int cmd_curve(const CurveOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows =
        sweep::payoff_curves(o.game, o.beta, o.tau_min, o.tau_max, o.steps);
    out << "tau,du1,du2,u12\n";
    for (const auto& r : rows) {
      write_row(out, {format_double(r.tau), format_double(r.du1),
                      format_double(r.du2), format_double(r.u12)});
    }
    return kExitOk;
  });
}

int cmd_region(const RegionOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    sweep::SweepGrid grid;
    grid.axes = {{"x1", o.x1_min, o.x1_max, o.resolution},
                 {"x2", o.x2_min, o.x2_max, o.resolution}};
    grid.fixed = {{"phi1", o.phi1},
                  {"phi2", o.phi2},
                  {"adversary_budget", o.adversary_budget}};
    grid.beta_list = o.beta_list;
    const auto cells = sweep::region_raster(grid);
    out << "beta,x1,x2,in_frame,case,mb_exists,tau_dagger\n";
    for (const auto& c : cells) {
      if (c.analysis) {
        write_row(out, {format_double(c.beta), format_double(c.x1),
                        format_double(c.x2), "1",
                        std::to_string(case_number(c.analysis->case_label)),
                        flag(c.analysis->mb_exists),
                        format_double(c.analysis->tau_dagger)});
      } else {
        write_row(out, {format_double(c.beta), format_double(c.x1),
                        format_double(c.x2), "0", "", "", ""});
      }
    }
    return kExitOk;
  });
}

int cmd_beta_sweep(const BetaSweepOptions& o, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = sweep::beta_sweep(o.game, o.beta_min, o.beta_max,
                                        o.steps, o.tau_samples);
    out << "beta,max_u1,max_u2,max_u12,max_u1_free,max_u2_free,u1_at_dagger,"
           "u2_at_dagger,tau_dagger,nominal_u1,nominal_u2,nominal_u12,"
           "mb_flag,alliance_flag\n";
    for (const auto& r : rows) {
      write_row(out,
                {format_double(r.beta), format_double(r.max_u1),
                 format_double(r.max_u2), format_double(r.max_u12),
                 format_double(r.max_u1_free), format_double(r.max_u2_free),
                 format_double(r.u1_at_dagger), format_double(r.u2_at_dagger),
                 format_double(r.tau_dagger), format_double(r.nominal.u1),
                 format_double(r.nominal.u2),
                 format_double(r.nominal.alliance()), flag(r.mb_flag),
                 flag(r.alliance_flag)});
    }
    return kExitOk;
  });
}

VerifyOutcome verify_one(const GameParams& g, double beta,
                         const VerifyOptions& o) {
  VerifyOutcome v;
  v.analysis = analyze(g, beta);
  const std::vector<double> taus = oracle::tau_grid(g, o.oracle.tau_step);
  v.claims = claims_for(g, beta, v.analysis, taus, o);
  v.report = oracle::transfer_grid_scan(g, beta, o.oracle, &v.claims);
  return v;
}

std::vector<GameParams> verify_games(const VerifyOptions& o) {
  if (auto g = fixture(o.seed)) return {*g};
  std::uint64_t seed = 0;
  try {
    std::size_t used = 0;
    seed = std::stoull(o.seed, &used);
    if (used != o.seed.size()) throw std::invalid_argument(o.seed);
  } catch (const std::exception&) {
    throw ConfigError("seed must be an integer or a fixture name "
                      "(fixed-g1, fixed-case-1-game, fixed-case-3-game, "
                      "fixed-case-4-game), got " + o.seed);
  }
  if (o.trials < 1) throw ConfigError("trials must be >= 1");
  if (!(o.param_min > 0.0 && o.param_min < o.param_max)) {
    throw ConfigError("sampling range must satisfy 0 < min < max");
  }
  std::mt19937_64 rng(seed);
  std::vector<GameParams> games;
  games.reserve(o.trials);
  while (static_cast<int>(games.size()) < o.trials) {
    GameParams g;
    g.phi1 = log_uniform(rng, o.param_min, o.param_max);
    g.phi2 = log_uniform(rng, o.param_min, o.param_max);
    g.x1 = log_uniform(rng, o.param_min, o.param_max);
    g.x2 = log_uniform(rng, o.param_min, o.param_max);
    g = normalize(g).first;
    if (near_case_boundary(g, o.boundary_margin)) continue;
    games.push_back(g);
  }
  return games;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    for (double b : o.betas) {
      if (!(b > 0.0 && b <= 1.0)) throw DomainError("betas must lie in (0, 1]");
    }
    const std::vector<GameParams> games = verify_games(o);

    json entries = json::array();
    std::size_t checks = 0, banded = 0, hard = 0, direction = 0;
    for (std::size_t gi = 0; gi < games.size(); ++gi) {
      const GameParams& g = games[gi];
      json per_beta = json::array();
      for (double beta : o.betas) {
        json e;
        e["beta"] = beta;
        try {
          const VerifyOutcome v = verify_one(g, beta, o);
          const TransferAnalysis& a = v.analysis;
          const oracle::ClosedFormClaims& c = v.claims;
          const oracle::OracleReport& rep = v.report;
          ++checks;
          if (!c.check_mb || !c.check_alliance) ++banded;
          e["case"] = case_number(a.case_at_zero);
          e["mb_closed_form"] = a.mb_exists;
          e["mb_grid"] = rep.mb_exists_grid;
          e["mb_checked"] = c.check_mb;
          e["alliance_checked"] = c.check_alliance;
          e["tau_dagger"] = a.alliance_tau;
          e["grid_alliance_argmax"] = rep.alliance_argmax_tau;
          e["x_a1_closed_form"] = c.x_a1_at_zero;
          e["x_a1_grid"] = rep.x_a1_at_zero;
          json dis = json::array();
          for (const auto& d : rep.disagreements) {
            dis.push_back({{"quantity", d.quantity},
                           {"closed_form", d.closed_form_value},
                           {"grid", d.grid_value},
                           {"allowed_slack", d.allowed_slack}});
            ++hard;
            if (d.quantity == "positive_mutual_tau") ++direction;
          }
          e["disagreements"] = dis;
        } catch (const InconsistencyError& ex) {
          ++hard;
          e["disagreements"] = json::array(
              {{{"quantity", "internal_inconsistency"}, {"what", ex.what()}}});
        }
        per_beta.push_back(e);
      }
      entries.push_back(
          {{"index", gi}, {"game", game_json(g)}, {"results", per_beta}});
    }

    json report;
    report["schema_version"] = kVerifySchema;
    report["config"] = {{"trials", o.trials},
                        {"seed", o.seed},
                        {"betas", o.betas},
                        {"tau_step", o.oracle.tau_step},
                        {"split_step", o.oracle.split_step},
                        {"tolerance", o.oracle.tolerance},
                        {"threshold_band", o.threshold_band},
                        {"boundary_margin", o.boundary_margin},
                        {"param_range", {o.param_min, o.param_max}}};
    report["games"] = entries;
    report["summary"] = {{"games", games.size()},
                         {"checks", checks},
                         {"banded_checks", banded},
                         {"disagreements", hard},
                         {"positive_tau_violations", direction}};
    report["ok"] = hard == 0;
    out << report.dump(2) << "\n";
    if (hard != 0) {
      err << "verify: " << hard << " disagreement(s) between closed form and "
          << "grid oracle\n";
      return kExitDisagreement;
    }
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Equilibrium and transfer analysis for inefficient coalitional "
               "General Lotto games",
               kToolName};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string config_path;
  auto add_config = [&config_path](CLI::App* sub) {
    sub->add_option("--config", config_path,
                    "key = value file mirroring the flags (flags win)");
  };
  auto add_game = [](CLI::App* sub, GameParams& g, bool required) {
    auto* p1 = sub->add_option("--phi1", g.phi1, "total valuation of game 1");
    auto* p2 = sub->add_option("--phi2", g.phi2, "total valuation of game 2");
    auto* x1 = sub->add_option("--x1", g.x1, "player 1 budget");
    auto* x2 = sub->add_option("--x2", g.x2, "player 2 budget");
    sub->add_option("--xa", g.adversary_budget, "adversary budget")
        ->capture_default_str();
    if (required) {
      for (auto* o : {p1, p2, x1, x2}) o->required();
    }
  };

  AnalyzeOptions analyze_o;
  auto* analyze = app.add_subcommand("analyze", "full transfer analysis");
  add_config(analyze);
  add_game(analyze, analyze_o.game, true);
  analyze->add_option("--beta", analyze_o.beta, "transfer efficiency in (0, 1]")
      ->required();
  auto* as_json = analyze->add_flag("--json", "JSON output (default)");
  auto* as_text = analyze->add_flag("--text", analyze_o.text, "text output");
  as_json->excludes(as_text);

  CurveOptions curve_o;
  auto* curve = app.add_subcommand("curve", "payoff change versus transfer");
  add_config(curve);
  add_game(curve, curve_o.game, true);
  curve->add_option("--beta", curve_o.beta)->required();
  curve->add_option("--tau-min", curve_o.tau_min)->required();
  curve->add_option("--tau-max", curve_o.tau_max)->required();
  curve->add_option("--steps", curve_o.steps)->capture_default_str();

  RegionOptions region_o;
  auto* region = app.add_subcommand("region", "existence regions over (x1, x2)");
  add_config(region);
  region->add_option("--phi1", region_o.phi1)->capture_default_str();
  region->add_option("--phi2", region_o.phi2)->capture_default_str();
  region->add_option("--xa", region_o.adversary_budget)->capture_default_str();
  region->add_option("--beta-list", region_o.beta_list)
      ->delimiter(',')
      ->capture_default_str();
  region->add_option("--x1-min", region_o.x1_min)->capture_default_str();
  region->add_option("--x1-max", region_o.x1_max)->capture_default_str();
  region->add_option("--x2-min", region_o.x2_min)->capture_default_str();
  region->add_option("--x2-max", region_o.x2_max)->capture_default_str();
  region->add_option("--resolution", region_o.resolution)
      ->capture_default_str();

  BetaSweepOptions sweep_o;
  auto* bsweep = app.add_subcommand("beta-sweep", "maxima versus beta");
  add_config(bsweep);
  add_game(bsweep, sweep_o.game, true);
  bsweep->add_option("--beta-min", sweep_o.beta_min)->capture_default_str();
  bsweep->add_option("--beta-max", sweep_o.beta_max)->capture_default_str();
  bsweep->add_option("--steps", sweep_o.steps)->capture_default_str();
  bsweep->add_option("--tau-samples", sweep_o.tau_samples)
      ->capture_default_str();

  VerifyOptions verify_o;
  auto* verify = app.add_subcommand("verify", "closed form versus grid oracle");
  add_config(verify);
  verify->add_option("--trials", verify_o.trials)->capture_default_str();
  verify->add_option("--seed", verify_o.seed,
                     "integer seed or fixture name (fixed-g1, "
                     "fixed-case-1-game, fixed-case-3-game, fixed-case-4-game)")
      ->capture_default_str();
  verify->add_option("--betas", verify_o.betas)
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--tau-step", verify_o.oracle.tau_step)
      ->capture_default_str();
  verify->add_option("--split-step", verify_o.oracle.split_step)
      ->capture_default_str();
  verify->add_option("--threads", verify_o.oracle.threads)
      ->capture_default_str();

  try {
    std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
    expand_config(args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const ConfigError& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitInvalid;
  }

  if (analyze->parsed()) return cmd_analyze(analyze_o, out, err);
  if (curve->parsed()) return cmd_curve(curve_o, out, err);
  if (region->parsed()) return cmd_region(region_o, out, err);
  if (bsweep->parsed()) return cmd_beta_sweep(sweep_o, out, err);
  if (verify->parsed()) return cmd_verify(verify_o, out, err);
  return kExitInvalid;
}

}  // namespace colotto::cli
