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

#ifndef SYNTHBENCH_SCORING_EMIT_H_
#define SYNTHBENCH_SCORING_EMIT_H_

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "synthbench/scoring/aggregate.h"
#include "synthbench/scoring/rank.h"
#include "synthbench/scoring/report.h"

namespace synthbench::scoring {

enum class Format { kJson, kMarkdown };

// "json", "markdown" or "md". Throws kUnsupportedFormat.
Format ParseFormat(std::string_view name);

// Two-space indent, sorted keys, shortest round-trip numbers, trailing LF.
std::string CanonicalJson(const nlohmann::json& j);

struct BenchmarkResult {
  std::map<std::string, AggregateResult> aggregates;
  DimensionScores scores;
  Recommendation recommendation;
};

// Aggregate -> dimension scores -> ranking.
BenchmarkResult Score(const std::vector<EvaluationReport>& reports,
                      const ScenarioWeights& weights);

nlohmann::json RecommendationToJson(const BenchmarkResult& result);

std::string EmitReport(const EvaluationReport& report, Format format);
std::string EmitRecommendation(const BenchmarkResult& result, Format format);

}  // namespace synthbench::scoring

#endif  // SYNTHBENCH_SCORING_EMIT_H_
