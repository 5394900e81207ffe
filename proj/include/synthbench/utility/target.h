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

#ifndef SYNTHBENCH_UTILITY_TARGET_H_
#define SYNTHBENCH_UTILITY_TARGET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synthbench/data/table.h"

namespace synthbench::utility {

// Maps the target column of a table to class indices. Categorical targets use
// the schema categories; continuous targets are cut at edges computed on the
// fit table (the real train split) and reused for every other table.
class TargetEncoder {
 public:
  // `quantiles` are levels in (0, 1) for the bin edges; absent means a median
  // split into {low, high}. Throws kSchemaMismatch for an unknown column,
  // kInvalidArgument for bad levels and kSingleClass when the fit table
  // yields one class.
  static TargetEncoder Fit(const data::Table& fit_table,
                           std::string_view target,
                           std::optional<std::vector<double>> quantiles = {});

  std::vector<int> Labels(const data::Table& table) const;
  // The table with the target column removed.
  data::Table Features(const data::Table& table) const;

  const std::string& target() const { return target_; }
  const std::vector<std::string>& class_labels() const { return labels_; }
  std::size_t num_classes() const { return labels_.size(); }
  bool binned() const { return !edges_.empty(); }
  const std::vector<double>& edges() const { return edges_; }

 private:
  std::string target_;
  std::size_t column_ = 0;
  std::vector<std::string> labels_;
  std::vector<double> edges_;
};

struct PreparedTarget {
  data::Table features;
  std::vector<int> labels;
};

PreparedTarget PrepareTarget(const TargetEncoder& encoder,
                             const data::Table& table);

// Linear-interpolation quantile of unsorted values, q in [0, 1].
double Quantile(std::vector<double> values, double q);

}  // namespace synthbench::utility

#endif  // SYNTHBENCH_UTILITY_TARGET_H_
