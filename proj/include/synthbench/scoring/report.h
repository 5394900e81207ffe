// Copyright 2026 The Synthbench Authors
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

#ifndef SYNTHBENCH_SCORING_REPORT_H_
#define SYNTHBENCH_SCORING_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "synthbench/data/table.h"
#include "synthbench/privacy/privacy.h"
#include "synthbench/resemblance/resemblance.h"
#include "synthbench/utility/utility.h"

namespace synthbench::scoring {

inline constexpr int kSpecVersion = 1;

std::string_view ToolVersion();

// One (generator, dataset) cell of the benchmark.
struct EvaluationReport {
  std::string dataset;
  std::string generator;
  std::uint64_t seed = 0;
  // Derived per-stage seeds, keyed by stage name.
  std::map<std::string, std::uint64_t> stage_seeds;
  std::size_t synthetic_rows = 0;
  double train_fraction = 0.0;
  data::DatasetSummary summary;
  resemblance::ResemblanceReport resemblance;
  utility::UtilityReport utility;
  privacy::PrivacyReport privacy;
  std::string tool_version;
  std::vector<std::string> warnings;
};

nlohmann::json ReportToJson(const EvaluationReport& report);
// Throws kSchemaMismatch for malformed or wrong-version documents.
EvaluationReport ReportFromJson(const nlohmann::json& j);

// Optional doubles map to null.
nlohmann::json OptionalToJson(const std::optional<double>& v);
std::optional<double> OptionalFromJson(const nlohmann::json& j);

}  // namespace synthbench::scoring

#endif  // SYNTHBENCH_SCORING_REPORT_H_
