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

#ifndef SYNTHBENCH_UTILITY_UTILITY_H_
#define SYNTHBENCH_UTILITY_UTILITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synthbench/data/table.h"
#include "synthbench/utility/classifier.h"
#include "synthbench/utility/metrics.h"

namespace synthbench::utility {

struct ClassifierResult {
  ClassifierKind kind = ClassifierKind::kLogisticRegression;
  UtilityMetrics trtr;
  UtilityMetrics tstr;
  UtilityMetrics diff;  // trtr - tstr
};

struct UtilityReport {
  std::string target;
  std::vector<std::string> class_labels;
  // Bin edges when a continuous target was cut into classes.
  std::vector<double> bin_edges;
  std::vector<ClassifierResult> classifiers;
  UtilityMetrics average_trtr;
  UtilityMetrics average_tstr;
  UtilityMetrics average_diff;

  bool target_binned() const { return !bin_edges.empty(); }
};

struct UtilityOptions {
  std::vector<ClassifierKind> kinds = {kAllClassifierKinds.begin(),
                                       kAllClassifierKinds.end()};
  // Quantile levels for continuous targets; absent means a median split.
  std::optional<std::vector<double>> target_quantiles;
};

// Encodes features with real_train statistics, trains every classifier on
// real_train (TRTR) and on synthetic (TSTR) with the same per-kind seed, and
// scores both on real_eval.
UtilityReport TstrTrtr(const data::Table& real_train,
                       const data::Table& real_eval,
                       const data::Table& synthetic, std::string_view target,
                       std::uint64_t seed, const UtilityOptions& options = {});

UtilityMetrics MeanMetrics(const std::vector<UtilityMetrics>& metrics);

}  // namespace synthbench::utility

#endif  // SYNTHBENCH_UTILITY_UTILITY_H_
