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

#include "synthbench/utility/target.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "synthbench/error.h"

namespace synthbench::utility {

double Quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error(ErrorCode::kEmptySet, "quantile of no values");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

TargetEncoder TargetEncoder::Fit(const data::Table& fit_table,
                                 std::string_view target,
                                 std::optional<std::vector<double>> quantiles) {
  TargetEncoder enc;
  enc.target_ = std::string(target);
  enc.column_ = fit_table.schema().IndexOf(target);
  const data::ColumnSpec& spec = fit_table.schema().columns[enc.column_];
  if (spec.is_categorical()) {
    enc.labels_ = spec.categories;
  } else {
    std::vector<double> levels = quantiles.value_or(std::vector<double>{0.5});
    if (levels.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "no quantile levels given");
    }
    std::sort(levels.begin(), levels.end());
    const std::vector<double> values =
        data::ContinuousValues(fit_table, enc.column_);
    if (values.empty()) {
      throw Error(ErrorCode::kEmptyTrainingSet, "no rows to bin target on");
    }
    for (double q : levels) {
      if (!(q > 0.0 && q < 1.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "quantile levels must lie in (0, 1)");
      }
      enc.edges_.push_back(Quantile(values, q));
    }
    if (enc.edges_.size() == 1) {
      enc.labels_ = {"low", "high"};
    } else {
      for (std::size_t i = 0; i <= enc.edges_.size(); ++i) {
        enc.labels_.push_back("q" + std::to_string(i + 1));
      }
    }
  }
  const std::vector<int> labels = enc.Labels(fit_table);
  const std::set<int> distinct(labels.begin(), labels.end());
  if (distinct.size() < 2) {
    throw Error(ErrorCode::kSingleClass,
                "target '" + enc.target_ + "' has a single class");
  }
  return enc;
}

std::vector<int> TargetEncoder::Labels(const data::Table& table) const {
  const std::size_t col = table.schema().IndexOf(target_);
  if (!binned()) return data::CategoryCodes(table, col);
  std::vector<int> out;
  out.reserve(table.num_rows());
  for (double v : data::ContinuousValues(table, col)) {
    // Values equal to an edge fall in the lower bin.
    const auto bin = std::lower_bound(edges_.begin(), edges_.end(), v) -
                     edges_.begin();
    out.push_back(static_cast<int>(bin));
  }
  return out;
}

data::Table TargetEncoder::Features(const data::Table& table) const {
  const std::size_t col = table.schema().IndexOf(target_);
  data::Schema schema = table.schema();
  schema.columns.erase(schema.columns.begin() + static_cast<long>(col));
  schema.target.reset();
  std::vector<data::Record> rows;
  rows.reserve(table.num_rows());
  for (const data::Record& r : table.rows()) {
    data::Record copy = r;
    copy.erase(copy.begin() + static_cast<long>(col));
    rows.push_back(std::move(copy));
  }
  return data::Table(std::move(schema), std::move(rows));
}

PreparedTarget PrepareTarget(const TargetEncoder& encoder,
                             const data::Table& table) {
  return {encoder.Features(table), encoder.Labels(table)};
}

}  // namespace synthbench::utility
