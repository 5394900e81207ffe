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

#ifndef SYNTHBENCH_PRIVACY_MIA_H_
#define SYNTHBENCH_PRIVACY_MIA_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "synthbench/data/table.h"

namespace synthbench::privacy {

struct MiaConfig {
  std::vector<double> thresholds = {0.4, 0.3, 0.2, 0.1};
  double attacker_member_fraction = 0.5;
  double continuous_match_tolerance = 0.05;
  std::uint64_t seed = 0;

  // Throws kInvalidArgument.
  void Validate() const;
};

struct ThresholdResult {
  double threshold = 0.0;
  // Absent when nothing was predicted to be a member.
  std::optional<double> precision;
  double accuracy = 0.0;
  double recall = 0.0;
};

struct MiaResult {
  std::vector<ThresholdResult> per_threshold;
  int score = 3;
  std::size_t members = 0;
  std::size_t non_members = 0;
};

// 3 below 0.5, 2 on [0.5, 0.8], 1 above 0.8.
int MiaCategory(double value);

// Worst category over every precision and accuracy; absent precision counts
// as 3. Throws kInvalidArgument for an empty list.
int MiaScore(std::span<const ThresholdResult> results);

// min distance from each attacker record to the synthetic table, as the
// fraction of mismatching attributes. Continuous attributes match when their
// values, min-max scaled by `scale_source`, differ by at most `tolerance`.
std::vector<double> MinMismatchDistances(const data::Table& attacker,
                                         const data::Table& synthetic,
                                         const data::Table& scale_source,
                                         double tolerance);

// Attacker holds m members from real_train and m non-members from
// real_holdout, m = min(|holdout|, floor(fraction * |train|)), and predicts
// "member" when the distance is at most the threshold. Throws kEmptyHoldout,
// kEmptySynthetic, kTooFewRows, or kSchemaMismatch.
MiaResult MiaAttack(const data::Table& real_train,
                    const data::Table& real_holdout,
                    const data::Table& synthetic, const MiaConfig& config);

}  // namespace synthbench::privacy

#endif  // SYNTHBENCH_PRIVACY_MIA_H_
