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

#include "synthbench/scoring/rank.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "synthbench/data/csv.h"
#include "synthbench/error.h"

namespace synthbench::scoring {

std::vector<double> NormalizeDimension(const std::vector<double>& raw,
                                       bool lower_is_better) {
  std::vector<double> out(raw.size(), 0.5);
  if (raw.size() < 2) return out;
  const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  const double range = *hi - *lo;
  if (range == 0.0) return out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double t = (raw[i] - *lo) / range;
    out[i] = lower_is_better ? 1.0 - t : t;
  }
  return out;
}

DimensionScores ComputeDimensionScores(
    const std::map<std::string, MetricMap>& raw) {
  DimensionScores out;
  for (const MetricDef& def : MetricDefs()) {
    if (!def.scored) continue;
    std::vector<std::string> holders;
    std::vector<double> values;
    for (const auto& [gen, metrics] : raw) {
      auto it = metrics.find(def.name);
      if (it == metrics.end()) continue;
      holders.push_back(gen);
      values.push_back(it->second);
    }
    if (holders.empty()) continue;
    if (holders.size() < raw.size()) {
      out.warnings.push_back(std::string(def.name) + " is unavailable for " +
                             std::to_string(raw.size() - holders.size()) +
                             " generator(s) and left out of their scores");
    }
    std::vector<double> scaled;
    if (std::string_view(def.name) == "mia_score") {
      for (double v : values) scaled.push_back((v - 1.0) / 2.0);
    } else {
      scaled = NormalizeDimension(values, def.lower_is_better);
    }
    for (std::size_t i = 0; i < holders.size(); ++i) {
      out.constituents[holders[i]][def.name] = scaled[i];
    }
  }
  for (const auto& [gen, metrics] : raw) {
    double sum[3] = {0, 0, 0};
    int n[3] = {0, 0, 0};
    for (const MetricDef& def : MetricDefs()) {
      auto& c = out.constituents[gen];
      auto it = c.find(def.name);
      if (it == c.end()) continue;
      const int d = static_cast<int>(def.dimension);
      sum[d] += it->second;
      ++n[d];
    }
    DimensionScore s;
    if (n[0]) s.resemblance = sum[0] / n[0];
    if (n[1]) s.utility = sum[1] / n[1];
    if (n[2]) s.privacy = sum[2] / n[2];
    out.scores[gen] = s;
  }
  return out;
}

void ScenarioWeights::Validate() const {
  for (double w : {resemblance, utility, privacy}) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::kInvalidWeights, "weights must be non-negative");
    }
  }
  if (std::abs(resemblance + utility + privacy - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidWeights, "weights must sum to 1");
  }
}

ScenarioWeights BalancedScenario() {
  return {"balanced", 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
}
ScenarioWeights UtilityHeavyScenario() { return {"utility", 0.4, 0.4, 0.2}; }
ScenarioWeights PrivacyHeavyScenario() { return {"privacy", 0.15, 0.15, 0.7}; }

ScenarioWeights ScenarioByName(std::string_view name) {
  if (name == "balanced") return BalancedScenario();
  if (name == "utility") return UtilityHeavyScenario();
  if (name == "privacy") return PrivacyHeavyScenario();
  throw Error(ErrorCode::kInvalidArgument,
              "unknown scenario '" + std::string(name) + "'");
}

ScenarioWeights ParseCustomWeights(std::string_view text) {
  std::vector<double> w;
  std::stringstream in{std::string(text)};
  std::string part;
  while (std::getline(in, part, ',')) {
    auto v = data::ParseReal(part);
    if (!v) {
      throw Error(ErrorCode::kInvalidWeights, "bad weight '" + part + "'");
    }
    w.push_back(*v);
  }
  if (w.size() != 3) {
    throw Error(ErrorCode::kInvalidWeights, "expected three weights");
  }
  ScenarioWeights s{"custom", w[0], w[1], w[2]};
  s.Validate();
  return s;
}

Recommendation ScenarioRank(const DimensionScores& scores,
                            const ScenarioWeights& weights) {
  weights.Validate();
  Recommendation rec;
  rec.scenario = weights;
  for (const auto& [gen, s] : scores.scores) {
    rec.ranking.push_back({gen,
                           weights.resemblance * s.resemblance +
                               weights.utility * s.utility +
                               weights.privacy * s.privacy,
                           s});
  }
  std::sort(rec.ranking.begin(), rec.ranking.end(),
            [](const RankedGenerator& a, const RankedGenerator& b) {
              if (a.weighted_score != b.weighted_score)
                return a.weighted_score > b.weighted_score;
              if (a.dimensions.privacy != b.dimensions.privacy)
                return a.dimensions.privacy > b.dimensions.privacy;
              return a.generator < b.generator;
            });
  for (std::size_t i = 1; i < rec.ranking.size(); ++i) {
    const RankedGenerator& a = rec.ranking[i - 1];
    const RankedGenerator& b = rec.ranking[i];
    if (a.weighted_score != b.weighted_score) continue;
    rec.tie_notes.push_back(
        a.generator + " and " + b.generator + " tie on weighted score; " +
        (a.dimensions.privacy != b.dimensions.privacy
             ? std::string("ordered by privacy score")
             : std::string("ordered by name")));
  }
  return rec;
}

}  // namespace synthbench::scoring
