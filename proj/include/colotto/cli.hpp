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

#ifndef COLOTTO_CLI_HPP_
#define COLOTTO_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "colotto/adversary_response.hpp"
#include "colotto/oracle.hpp"
#include "colotto/transfer_engine.hpp"

namespace colotto::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInvalid = 2;

struct AnalyzeOptions {
  GameParams game;
  double beta = 1.0;
  bool text = false;
};

struct CurveOptions {
  GameParams game;
  double beta = 1.0;
  double tau_min = 0.0;
  double tau_max = 0.0;
  int steps = 1001;
};

struct RegionOptions {
  double phi1 = 1.2;
  double phi2 = 1.0;
  double adversary_budget = 1.0;
  std::vector<double> beta_list{0.25, 0.5, 1.0};
  double x1_min = 0.01;
  double x1_max = 2.0;
  double x2_min = 0.01;
  double x2_max = 2.0;
  int resolution = 200;
};

struct BetaSweepOptions {
  GameParams game;
  double beta_min = 0.001;
  double beta_max = 1.0;
  int steps = 1000;
  int tau_samples = 2001;
};

struct VerifyOptions {
  int trials = 200;
  std::string seed = "7";
  std::vector<double> betas{0.1, 0.3, 0.5, 0.8, 1.0};
  oracle::OracleConfig oracle;
  // Width of the beta bands around closed-form thresholds that are skipped.
  double threshold_band = 1e-3;
  // Sampled games closer than this to a case boundary are redrawn.
  double boundary_margin = 1e-3;
  double param_min = 0.05;
  double param_max = 5.0;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err);
int cmd_curve(const CurveOptions& o, std::ostream& out, std::ostream& err);
int cmd_region(const RegionOptions& o, std::ostream& out, std::ostream& err);
int cmd_beta_sweep(const BetaSweepOptions& o, std::ostream& out,
                   std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);

// Games drawn by `verify` for a numeric seed, or the single fixture game
// for a named seed such as "fixed-case-1-game". Throws ConfigError for an
// unknown name.
std::vector<GameParams> verify_games(const VerifyOptions& o);

// One closed-form versus oracle comparison, as run by `verify` for each
// (game, beta) pair. `g` must be oriented with adversary budget 1.
struct VerifyOutcome {
  TransferAnalysis analysis;
  oracle::ClosedFormClaims claims;
  oracle::OracleReport report;
};

VerifyOutcome verify_one(const GameParams& g, double beta,
                         const VerifyOptions& o);

// Parses argv (argv[0] is the program name) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace colotto::cli

#endif  // COLOTTO_CLI_HPP_
