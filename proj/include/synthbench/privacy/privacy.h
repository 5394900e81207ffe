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

#ifndef SYNTHBENCH_PRIVACY_PRIVACY_H_
#define SYNTHBENCH_PRIVACY_PRIVACY_H_

#include <string>
#include <vector>

#include "synthbench/data/table.h"
#include "synthbench/privacy/distance.h"
#include "synthbench/privacy/mia.h"

namespace synthbench::privacy {

struct PrivacyReport {
  DistanceReport distances;
  MiaResult mia;
};

// Distances are measured in the one-hot + min-max space fitted on real_train.
PrivacyReport EvaluatePrivacy(const data::Table& real_train,
                              const data::Table& real_holdout,
                              const data::Table& synthetic,
                              const MiaConfig& config);

// Leak, model-collapse, and undefined-NNDR notes for a report.
std::vector<std::string> PrivacyWarnings(const PrivacyReport& report);

}  // namespace synthbench::privacy

#endif  // SYNTHBENCH_PRIVACY_PRIVACY_H_
