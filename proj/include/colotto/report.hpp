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

#ifndef COLOTTO_REPORT_HPP_
#define COLOTTO_REPORT_HPP_

#include <string>

#include "colotto/adversary_response.hpp"
#include "colotto/transfer_engine.hpp"
#include "json.hpp"

namespace colotto {

inline constexpr const char* kToolName = "colotto";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kAnalysisSchema = "colotto.analysis/1";
inline constexpr const char* kVerifySchema = "colotto.verify/1";

// Everything `colotto analyze` reports for one game and one beta.
struct AnalysisReport {
  GameParams raw;
  double beta = 1.0;
  TransferAnalysis analysis;
  AdversaryResponse split_at_zero;  // oriented, normalized frame
};

AnalysisReport make_report(const GameParams& raw, double beta);

// Infinite thresholds are written as null and read back as +inf.
nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

// Human-readable rendering used by `analyze --text`.
std::string to_text(const AnalysisReport& r);

// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace colotto

#endif  // COLOTTO_REPORT_HPP_
