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

#ifndef SYNTHBENCH_SCORING_AGGREGATE_H_
#define SYNTHBENCH_SCORING_AGGREGATE_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "synthbench/scoring/report.h"

namespace synthbench::scoring {

// Raw metric values keyed by metric name.
using MetricMap = std::map<std::string, double>;

enum class Dimension { kResemblance, kUtility, kPrivacy };

struct MetricDef {
  const char* name;
  Dimension dimension;
  bool lower_is_better;
  // Constituent of the dimension score (others are carried for reporting).
  bool scored;
};

// Every metric RawMetrics may emit, in report order.
const std::vector<MetricDef>& MetricDefs();

// Flattens a report into its raw metrics; undefined values are left out.
MetricMap RawMetrics(const EvaluationReport& report);

// Arithmetic mean per metric over the maps that hold it, computed as
// v0 + mean(v_i - v0) so identical inputs average to themselves exactly.
struct AggregateResult {
  MetricMap mean;
  std::map<std::string, std::size_t> count;
  std::size_t cells = 0;
  std::vector<std::string> notes;
};
AggregateResult AggregateMetrics(const std::vector<MetricMap>& cells);

// Per-generator cross-dataset averages. Throws kNoReports, or
// kInvalidArgument when a (generator, dataset) cell repeats.
std::map<std::string, AggregateResult> Aggregate(
    const std::vector<EvaluationReport>& reports);

}  // namespace synthbench::scoring

#endif  // SYNTHBENCH_SCORING_AGGREGATE_H_
