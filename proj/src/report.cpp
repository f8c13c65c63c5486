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

#include "colotto/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace colotto {
namespace {

using nlohmann::json;

json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double read_or_inf(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

json game_json(const GameParams& g) {
  return {{"phi1", g.phi1},
          {"phi2", g.phi2},
          {"x1", g.x1},
          {"x2", g.x2},
          {"adversary_budget", g.adversary_budget}};
}

GameParams game_from(const json& j) {
  return {j.at("phi1").get<double>(), j.at("phi2").get<double>(),
          j.at("x1").get<double>(), j.at("x2").get<double>(),
          j.at("adversary_budget").get<double>()};
}

json profile_json(const PayoffProfile& p) {
  return {{"u1", p.u1},
          {"u2", p.u2},
          {"u_adversary", p.u_adversary},
          {"u12", p.alliance()}};
}

PayoffProfile profile_from(const json& j) {
  return {j.at("u1").get<double>(), j.at("u2").get<double>(),
          j.at("u_adversary").get<double>()};
}

Case case_from(const json& j) {
  const int c = j.get<int>();
  if (c < 1 || c > 4) throw std::invalid_argument("case label out of range");
  return static_cast<Case>(c);
}

AllianceStop stop_from(const std::string& s) {
  for (AllianceStop v : {AllianceStop::kInGDagger, AllianceStop::kStationary,
                         AllianceStop::kCaseBoundary,
                         AllianceStop::kProportional}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown alliance stop " + s);
}

}  // namespace

AnalysisReport make_report(const GameParams& raw, double beta) {
  AnalysisReport r;
  r.raw = raw;
  r.beta = beta;
  r.analysis = analyze(raw, beta);
  r.split_at_zero = optimal_split(r.analysis.normalized);
  return r;
}

json to_json(const AnalysisReport& r) {
  const TransferAnalysis& a = r.analysis;
  json interval = nullptr;
  if (a.mb_interval) {
    interval = {{"low", a.mb_interval->low},
                {"high", a.mb_interval->high},
                {"disconnected", a.mb_interval->disconnected},
                {"unresolved", a.mb_interval->unresolved}};
  }
  json j;
  j["schema_version"] = kAnalysisSchema;
  j["input"] = {{"game", game_json(r.raw)}, {"beta", r.beta}};
  j["normalized"] = game_json(a.normalized);
  j["orientation"] = {{"swapped", a.orientation.swapped}};
  j["case_at_zero"] = case_number(a.case_at_zero);
  j["adversary_split_at_zero"] = {{"case", case_number(r.split_at_zero.case_label)},
                                  {"x_a1", r.split_at_zero.x_a1},
                                  {"x_a2", r.split_at_zero.x_a2}};
  j["nominal"] = profile_json(a.nominal);
  j["transfer_analysis"] = {
      {"mb_exists", a.mb_exists},
      {"mb_interval", interval},
      {"mb_beta_threshold", a.mb_beta_threshold},
      {"mb_case_threshold", finite_or_null(a.mb_case_threshold)},
      {"alliance_beta_threshold", finite_or_null(a.alliance_beta_threshold)},
      {"alliance_tau", a.alliance_tau},
      {"alliance_payoff_gain", a.alliance_payoff_gain},
      {"alliance_stop", std::string(to_string(a.alliance_stop))},
      {"in_g_dagger", a.in_g_dagger}};
  j["provenance"] = {
      {"tool", kToolName},
      {"version", kToolVersion},
      {"bisection_tolerance", kBisectionTolerance},
      {"bisection_max_iterations", kBisectionMaxIterations},
      {"case4_rel_tolerance", kCase4RelTolerance},
      {"case4_split", "proportional: x_a_i = x_i / (x1 + x2)"},
      {"tau_domain_clamp", 1e-12}};
  return j;
}

AnalysisReport report_from_json(const json& j) {
  if (j.at("schema_version").get<std::string>() != kAnalysisSchema) {
    throw std::invalid_argument("unsupported analysis schema");
  }
  AnalysisReport r;
  r.raw = game_from(j.at("input").at("game"));
  r.beta = j.at("input").at("beta").get<double>();
  TransferAnalysis& a = r.analysis;
  a.beta = r.beta;
  a.normalized = game_from(j.at("normalized"));
  a.orientation.swapped = j.at("orientation").at("swapped").get<bool>();
  a.case_at_zero = case_from(j.at("case_at_zero"));
  const json& s = j.at("adversary_split_at_zero");
  r.split_at_zero = {case_from(s.at("case")), s.at("x_a1").get<double>(),
                     s.at("x_a2").get<double>()};
  a.nominal = profile_from(j.at("nominal"));
  const json& t = j.at("transfer_analysis");
  a.mb_exists = t.at("mb_exists").get<bool>();
  if (!t.at("mb_interval").is_null()) {
    const json& in = t.at("mb_interval");
    a.mb_interval = TauInterval{in.at("low").get<double>(),
                                in.at("high").get<double>(),
                                in.at("disconnected").get<bool>(),
                                in.at("unresolved").get<bool>()};
  }
  a.mb_beta_threshold = t.at("mb_beta_threshold").get<double>();
  a.mb_case_threshold = read_or_inf(t.at("mb_case_threshold"));
  a.alliance_beta_threshold = read_or_inf(t.at("alliance_beta_threshold"));
  a.alliance_tau = t.at("alliance_tau").get<double>();
  a.alliance_payoff_gain = t.at("alliance_payoff_gain").get<double>();
  a.alliance_stop = stop_from(t.at("alliance_stop").get<std::string>());
  a.in_g_dagger = t.at("in_g_dagger").get<bool>();
  return r;
}

std::string to_text(const AnalysisReport& r) {
  const TransferAnalysis& a = r.analysis;
  std::ostringstream os;
  os << "game            phi1=" << format_double(r.raw.phi1)
     << " phi2=" << format_double(r.raw.phi2)
     << " x1=" << format_double(r.raw.x1) << " x2=" << format_double(r.raw.x2)
     << " xa=" << format_double(r.raw.adversary_budget)
     << " beta=" << format_double(r.beta) << "\n";
  os << "orientation     " << (a.orientation.swapped ? "swapped" : "as given")
     << "\n";
  os << "case at tau=0   " << to_string(a.case_at_zero) << " (x_a1="
     << format_double(r.split_at_zero.x_a1) << ")\n";
  os << "nominal         u1=" << format_double(a.nominal.u1)
     << " u2=" << format_double(a.nominal.u2)
     << " uA=" << format_double(a.nominal.u_adversary) << "\n";
  os << "mutual benefit  " << (a.mb_exists ? "yes" : "no")
     << "  threshold=" << format_double(a.mb_beta_threshold);
  if (a.mb_interval) {
    os << "  interval=(" << format_double(a.mb_interval->low) << ", "
       << format_double(a.mb_interval->high) << ")";
  }
  os << "\n";
  os << "alliance        tau_dagger=" << format_double(a.alliance_tau)
     << " gain=" << format_double(a.alliance_payoff_gain)
     << " stop=" << to_string(a.alliance_stop)
     << " in_g_dagger=" << (a.in_g_dagger ? "yes" : "no") << "\n";
  return os.str();
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace colotto
