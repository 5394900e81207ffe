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

#ifndef SYNTHBENCH_CLI_PIPELINE_H_
#define SYNTHBENCH_CLI_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synthbench/data/table.h"
#include "synthbench/scoring/emit.h"
#include "synthbench/scoring/rank.h"
#include "synthbench/scoring/report.h"

namespace synthbench::cli {

struct GeneratorSpec {
  enum class Kind { kGaussianMultivariate, kGaussianCopula, kExternal };
  Kind kind = Kind::kGaussianCopula;
  std::filesystem::path path;  // external only

  // "gm", "gc", or "external_<file stem>".
  std::string Name() const;
  bool fittable() const { return kind != Kind::kExternal; }
};

// "gm" | "gc" | "external:<path>". Throws kInvalidArgument.
GeneratorSpec ParseGeneratorSpec(std::string_view text);

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr double kDefaultTrainFraction = 0.7;

struct RunConfig {
  std::filesystem::path real_path;
  std::optional<std::filesystem::path> schema_path;
  std::optional<std::string> target;
  std::vector<GeneratorSpec> generators;
  std::size_t rows = 5000;
  double train_fraction = kDefaultTrainFraction;
  std::uint64_t seed = kDefaultSeed;
  scoring::ScenarioWeights scenario = scoring::BalancedScenario();
  std::filesystem::path out_dir = "synthbench_out";
  std::vector<scoring::Format> formats = {scoring::Format::kJson,
                                          scoring::Format::kMarkdown};

  // At least one generator, unique names, inputs distinct from the output
  // directory, rows > 0, fraction in (0, 1). Throws kInvalidArgument.
  void Validate() const;
};

// The cleaned real table and its seeded split, shared by every generator.
struct PreparedData {
  std::string dataset;
  data::Table real;
  data::Table train;
  data::Table eval;
  std::vector<std::string> warnings;
};

PreparedData LoadAndSplit(const RunConfig& config);

// A failure inside one stage of the pipeline.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, std::string generator, const std::exception& e);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Fits the single generator on the train split and writes
// synthetic_<gen>.csv and model_<gen>.json. Returns the written paths.
std::vector<std::filesystem::path> RunGenerate(const RunConfig& config);

struct EvaluateResult {
  std::vector<scoring::EvaluationReport> reports;
  std::optional<scoring::BenchmarkResult> benchmark;
  std::vector<std::filesystem::path> written;
  std::vector<std::string> failures;  // one "stage ...: message" per generator
};

// Runs every generator on the same split, writing each report as soon as it
// is complete, then recommendation.json (and .md when markdown is selected).
EvaluateResult RunEvaluate(const RunConfig& config);

// "gm: resemblance=0.500 utility=0.500 privacy=0.500 mia_score=2".
std::string SummaryLine(const scoring::BenchmarkResult& benchmark,
                        const scoring::EvaluationReport& report);

}  // namespace synthbench::cli

#endif  // SYNTHBENCH_CLI_PIPELINE_H_
