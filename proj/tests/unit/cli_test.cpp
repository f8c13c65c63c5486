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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "colotto/report.hpp"
#include "json.hpp"

namespace colotto::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "colotto");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kG1Args{"--phi1", "1",   "--phi2", "1.2",
                                       "--x1",   "0.5", "--x2",   "1.5"};

std::vector<std::string> with_g1(std::vector<std::string> head,
                                 std::vector<std::string> tail = {}) {
  head.insert(head.end(), kG1Args.begin(), kG1Args.end());
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(Analyze, JsonReportForG1) {
  const auto r = invoke(with_g1({"analyze"}, {"--beta", "1"}));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], kAnalysisSchema);
  EXPECT_EQ(j["case_at_zero"], 2);
  EXPECT_TRUE(j["transfer_analysis"]["mb_exists"].get<bool>());
  EXPECT_NEAR(j["transfer_analysis"]["mb_beta_threshold"].get<double>(),
              0.50994, 1e-5);
  EXPECT_EQ(j["provenance"]["tool"], kToolName);
}

TEST(Analyze, ReportRoundTripsThroughJson) {
  const auto r = invoke(with_g1({"analyze"}, {"--beta", "0.7"}));
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(to_json(report_from_json(j)), j);
  const auto c1 = invoke({"analyze", "--phi1", "1", "--phi2", "1.2", "--x1",
                          "2", "--x2", "3", "--beta", "0.5"});
  const auto k = nlohmann::json::parse(c1.out);
  EXPECT_EQ(to_json(report_from_json(k)), k);
}

TEST(Analyze, TextOutput) {
  const auto r = invoke(with_g1({"analyze"}, {"--beta", "1", "--text"}));
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Case2"), std::string::npos);
}

TEST(Analyze, InvalidParametersExitTwo) {
  EXPECT_EQ(invoke({"analyze", "--phi1", "-1", "--phi2", "1", "--x1", "1",
                    "--x2", "1", "--beta", "1"})
                .code,
            kExitInvalid);
  EXPECT_EQ(invoke(with_g1({"analyze"}, {"--beta", "0"})).code, kExitInvalid);
  EXPECT_EQ(invoke(with_g1({"analyze"}, {"--beta", "1.5"})).code,
            kExitInvalid);
  EXPECT_EQ(invoke({"analyze", "--phi1", "1"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"bogus"}).code, kExitInvalid);
  EXPECT_EQ(invoke({}).code, kExitInvalid);
}

TEST(Analyze, Deterministic) {
  const auto a = invoke(with_g1({"analyze"}, {"--beta", "0.9"}));
  const auto b = invoke(with_g1({"analyze"}, {"--beta", "0.9"}));
  EXPECT_EQ(a.out, b.out);
}

TEST(Analyze, ReadsConfigFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "colotto_cli_test.ini";
  {
    std::ofstream f(path);
    f << "phi1 = 1\nphi2 = 1.2\nx1 = 0.5\nx2 = 1.5\nbeta = 0.9\n";
  }
  const auto a = invoke({"analyze", "--config", path.string()});
  const auto b = invoke({"analyze", "--beta", "0.5", "--config", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, invoke(with_g1({"analyze"}, {"--beta", "0.9"})).out);
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(b.out, invoke(with_g1({"analyze"}, {"--beta", "0.5"})).out);
  EXPECT_EQ(invoke({"analyze", "--config", path.string()}).code, kExitInvalid);
}

TEST(Curve, CsvShape) {
  const auto r = invoke(with_g1(
      {"curve"}, {"--beta", "1", "--tau-min", "-1", "--tau-max", "0.4",
                  "--steps", "15"}));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 16u);
  EXPECT_EQ(ls[0], "tau,du1,du2,u12");
  EXPECT_EQ(ls[1].rfind("-1,", 0), 0u);
  EXPECT_EQ(invoke(with_g1({"curve"}, {"--beta", "1", "--tau-min", "-2",
                                       "--tau-max", "0.4"}))
                .code,
            kExitInvalid);
}

TEST(Region, CsvShape) {
  const auto r = invoke({"region", "--resolution", "5", "--beta-list", "0.5",
                         "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u + 2 * 25);
  EXPECT_EQ(ls[0], "beta,x1,x2,in_frame,case,mb_exists,tau_dagger");
  EXPECT_EQ(invoke({"region", "--resolution", "1"}).code, kExitInvalid);
}

TEST(BetaSweep, CsvShape) {
  const auto r = invoke(with_g1({"beta-sweep"}, {"--steps", "10",
                                                 "--tau-samples", "101"}));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 11u);
  EXPECT_EQ(ls[0].rfind("beta,max_u1,max_u2,max_u12,", 0), 0u);
  EXPECT_EQ(invoke(with_g1({"beta-sweep"}, {"--beta-min", "0"})).code,
            kExitInvalid);
}

TEST(Verify, NamedFixtures) {
  for (const char* seed : {"fixed-g1", "fixed-case-1-game",
                           "fixed-case-3-game", "fixed-case-4-game"}) {
    const auto r = invoke({"verify", "--seed", seed, "--tau-step", "1e-3"});
    ASSERT_EQ(r.code, kExitOk) << seed << "\n" << r.err << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema_version"], kVerifySchema);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["summary"]["disagreements"], 0);
  }
  EXPECT_EQ(invoke({"verify", "--seed", "no-such-game"}).code, kExitInvalid);

  const auto c1 = invoke({"verify", "--trials", "1", "--seed",
                          "fixed-case-1-game", "--tau-step", "1e-3"});
  ASSERT_EQ(c1.code, kExitOk);
  for (const auto& r : nlohmann::json::parse(c1.out)["games"][0]["results"]) {
    EXPECT_FALSE(r["mb_closed_form"].get<bool>());
    EXPECT_FALSE(r["mb_grid"].get<bool>());
  }
}

TEST(Verify, RandomTrialsAreReproducible) {
  const std::vector<std::string> args{"verify", "--trials", "3", "--seed",
                                      "99", "--tau-step", "1e-3"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["summary"]["games"], 3);
}

TEST(VerifyGames, FixturesAndSampling) {
  VerifyOptions o;
  o.seed = "fixed-g1";
  const auto g = verify_games(o);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].phi2, 1.2);
  o.seed = "5";
  o.trials = 50;
  for (const auto& s : verify_games(o)) {
    EXPECT_TRUE(is_oriented(s));
    EXPECT_GE(std::min({s.phi1, s.phi2, s.x1, s.x2}), 0.05);
    EXPECT_LE(std::max({s.phi1, s.phi2, s.x1, s.x2}), 5.0);
  }
}

}  // namespace
}  // namespace colotto::cli
