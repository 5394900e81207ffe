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

#include "synthbench/privacy/privacy.h"

#include "synthbench/data/csv.h"
#include "synthbench/data/encoding.h"

namespace synthbench::privacy {

PrivacyReport EvaluatePrivacy(const data::Table& real_train,
                              const data::Table& real_holdout,
                              const data::Table& synthetic,
                              const MiaConfig& config) {
  const data::Encoder enc = data::Encoder::Fit(real_train);
  PrivacyReport report;
  report.distances =
      EvaluateDistances(enc.Transform(real_train), enc.Transform(synthetic));
  report.mia = MiaAttack(real_train, real_holdout, synthetic, config);
  return report;
}

std::vector<std::string> PrivacyWarnings(const PrivacyReport& report) {
  const DistanceReport& d = report.distances;
  std::vector<std::string> out;
  if (d.dcr_real_synth == 0.0) {
    out.push_back(
        "privacy leak: at least 5% of synthetic rows are exact copies of real "
        "training rows (dcr_real_synth = 0)");
  }
  if (d.model_collapse) {
    out.push_back("model collapse: dcr_within_synth " +
                  data::FormatReal(d.dcr_within_synth) +
                  " is below half of dcr_within_real " +
                  data::FormatReal(d.dcr_within_real));
  }
  if (d.dcr_within_real == 0.0) {
    out.push_back("real training data contains duplicate rows "
                  "(dcr_within_real = 0)");
  }
  auto undefined = [&](const std::optional<double>& v, const char* name) {
    if (!v) out.push_back(std::string(name) + " is undefined (all 0/0)");
  };
  undefined(d.nndr_real_synth, "nndr_real_synth");
  undefined(d.nndr_within_real, "nndr_within_real");
  undefined(d.nndr_within_synth, "nndr_within_synth");
  return out;
}

}  // namespace synthbench::privacy
