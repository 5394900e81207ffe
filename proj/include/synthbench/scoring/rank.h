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

#ifndef SYNTHBENCH_SCORING_RANK_H_
#define SYNTHBENCH_SCORING_RANK_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "synthbench/scoring/aggregate.h"

namespace synthbench::scoring {

// Min-max across generators; lower-is-better values are flipped so 1 is
// best. A single value or all-equal values give 0.5 each.
std::vector<double> NormalizeDimension(const std::vector<double>& raw,
                                       bool lower_is_better);

struct DimensionScore {
  double resemblance = 0.5;
  double utility = 0.5;
  double privacy = 0.5;
};

struct DimensionScores {
  std::map<std::string, DimensionScore> scores;
  // Per generator, each scored constituent on its [0, 1] scale.
  std::map<std::string, MetricMap> constituents;
  std::vector<std::string> warnings;
};

// Each dimension is the mean of its constituents: normalized metrics plus
// (mia_score - 1) / 2 for privacy. A metric missing for some generators
// (undefined NNDR, no categorical columns) is left out of their means with a
// warning.
DimensionScores ComputeDimensionScores(
    const std::map<std::string, MetricMap>& raw);

struct ScenarioWeights {
  std::string name;
  double resemblance = 0.0;
  double utility = 0.0;
  double privacy = 0.0;

  // Non-negative and summing to 1 within 1e-12. Throws kInvalidWeights.
  void Validate() const;
};

ScenarioWeights BalancedScenario();
ScenarioWeights UtilityHeavyScenario();
ScenarioWeights PrivacyHeavyScenario();
// "balanced", "utility", or "privacy". Throws kInvalidArgument.
ScenarioWeights ScenarioByName(std::string_view name);
// "w_resemblance,w_utility,w_privacy". Throws kInvalidWeights.
ScenarioWeights ParseCustomWeights(std::string_view text);

struct RankedGenerator {
  std::string generator;
  double weighted_score = 0.0;
  DimensionScore dimensions;
};

struct Recommendation {
  ScenarioWeights scenario;
  std::vector<RankedGenerator> ranking;
  std::vector<std::string> tie_notes;
};

// Sorted by weighted score, then privacy score (both descending), then name.
Recommendation ScenarioRank(const DimensionScores& scores,
                            const ScenarioWeights& weights);

}  // namespace synthbench::scoring

#endif  // SYNTHBENCH_SCORING_RANK_H_
