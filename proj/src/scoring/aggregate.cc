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

#include "synthbench/scoring/aggregate.h"

#include <set>
#include <utility>

#include "synthbench/error.h"

namespace synthbench::scoring {

const std::vector<MetricDef>& MetricDefs() {
  static const std::vector<MetricDef> defs = {
      {"jsd", Dimension::kResemblance, true, true},
      {"wd", Dimension::kResemblance, true, true},
      {"corr_diff", Dimension::kResemblance, true, true},
      {"accuracy_diff", Dimension::kUtility, true, true},
      {"f1_diff", Dimension::kUtility, true, true},
      {"auc_diff", Dimension::kUtility, true, true},
      {"dcr_real_synth", Dimension::kPrivacy, false, true},
      {"nndr_real_synth", Dimension::kPrivacy, false, true},
      {"mia_score", Dimension::kPrivacy, false, true},
      {"dcr_within_real", Dimension::kPrivacy, false, false},
      {"dcr_within_synth", Dimension::kPrivacy, false, false},
      {"nndr_within_real", Dimension::kPrivacy, false, false},
      {"nndr_within_synth", Dimension::kPrivacy, false, false},
  };
  return defs;
}

MetricMap RawMetrics(const EvaluationReport& r) {
  MetricMap m;
  auto put = [&](const char* name, const std::optional<double>& v) {
    if (v) m[name] = *v;
  };
  put("jsd", r.resemblance.avg_jsd);
  put("wd", r.resemblance.avg_wd);
  m["corr_diff"] = r.resemblance.corr_diff;
  m["accuracy_diff"] = r.utility.average_diff.accuracy;
  m["f1_diff"] = r.utility.average_diff.f1_macro;
  m["auc_diff"] = r.utility.average_diff.roc_auc;
  const privacy::DistanceReport& d = r.privacy.distances;
  m["dcr_real_synth"] = d.dcr_real_synth;
  put("nndr_real_synth", d.nndr_real_synth);
  m["mia_score"] = static_cast<double>(r.privacy.mia.score);
  m["dcr_within_real"] = d.dcr_within_real;
  m["dcr_within_synth"] = d.dcr_within_synth;
  put("nndr_within_real", d.nndr_within_real);
  put("nndr_within_synth", d.nndr_within_synth);
  return m;
}

AggregateResult AggregateMetrics(const std::vector<MetricMap>& cells) {
  if (cells.empty()) throw Error(ErrorCode::kNoReports, "nothing to aggregate");
  AggregateResult out;
  out.cells = cells.size();
  std::map<std::string, std::vector<double>> values;
  for (const MetricMap& cell : cells) {
    for (const auto& [name, v] : cell) values[name].push_back(v);
  }
  for (const auto& [name, vs] : values) {
    double shift = 0.0;
    for (double v : vs) shift += v - vs.front();
    out.mean[name] = vs.front() + shift / static_cast<double>(vs.size());
    out.count[name] = vs.size();
    if (vs.size() < cells.size()) {
      out.notes.push_back(name + " averaged over " + std::to_string(vs.size()) +
                          " of " + std::to_string(cells.size()) +
                          " datasets (absent elsewhere)");
    }
  }
  return out;
}

std::map<std::string, AggregateResult> Aggregate(
    const std::vector<EvaluationReport>& reports) {
  if (reports.empty()) throw Error(ErrorCode::kNoReports, "no reports given");
  std::map<std::string, std::vector<MetricMap>> by_generator;
  std::set<std::pair<std::string, std::string>> seen;
  for (const EvaluationReport& r : reports) {
    if (!seen.emplace(r.generator, r.dataset).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate report for generator '" + r.generator +
                      "' on dataset '" + r.dataset + "'");
    }
    by_generator[r.generator].push_back(RawMetrics(r));
  }
  std::map<std::string, AggregateResult> out;
  for (const auto& [gen, cells] : by_generator) {
    out.emplace(gen, AggregateMetrics(cells));
  }
  return out;
}

}  // namespace synthbench::scoring
