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

#ifndef SYNTHBENCH_UTILITY_METRICS_H_
#define SYNTHBENCH_UTILITY_METRICS_H_

#include <cstddef>
#include <span>

#include "synthbench/data/encoding.h"

namespace synthbench::utility {

struct UtilityMetrics {
  double accuracy = 0.0;
  double f1_macro = 0.0;
  double roc_auc = 0.0;

  friend UtilityMetrics operator-(const UtilityMetrics& a,
                                  const UtilityMetrics& b) {
    return {a.accuracy - b.accuracy, a.f1_macro - b.f1_macro,
            a.roc_auc - b.roc_auc};
  }
  friend bool operator==(const UtilityMetrics&, const UtilityMetrics&) =
      default;
};

// Index of the largest entry of each row; the first one wins ties.
std::vector<int> ArgmaxRows(const data::RowMatrix& probs);

// Macro F1 over classes present in the truth or the prediction.
double F1Macro(std::span<const int> y_true, std::span<const int> y_pred,
               std::size_t n_classes);

// Macro one-vs-rest AUC from average ranks (Mann-Whitney). Classes with no
// positive or no negative example are skipped; 0.5 when none remain.
double MacroRocAuc(std::span<const int> y_true, const data::RowMatrix& probs);

// Throws kLengthMismatch when |y_true| differs from the row count.
UtilityMetrics ClassificationMetrics(std::span<const int> y_true,
                                     const data::RowMatrix& probs);

}  // namespace synthbench::utility

#endif  // SYNTHBENCH_UTILITY_METRICS_H_
