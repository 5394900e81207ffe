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

#include "synthbench/generators/gaussian_multivariate.h"

#include <algorithm>
#include <cmath>

#include "synthbench/error.h"
#include "synthbench/generators/gaussian.h"

namespace synthbench::generators {

Eigen::MatrixXd LabelEncode(const data::Table& table) {
  const data::Schema& schema = table.schema();
  Eigen::MatrixXd x(static_cast<Eigen::Index>(table.num_rows()),
                    static_cast<Eigen::Index>(schema.size()));
  for (std::size_t c = 0; c < schema.size(); ++c) {
    const auto col = static_cast<Eigen::Index>(c);
    if (schema.columns[c].is_categorical()) {
      const std::vector<int> codes = data::CategoryCodes(table, c);
      for (std::size_t r = 0; r < codes.size(); ++r) {
        x(static_cast<Eigen::Index>(r), col) = codes[r];
      }
    } else {
      const std::vector<double> values = data::ContinuousValues(table, c);
      for (std::size_t r = 0; r < values.size(); ++r) {
        x(static_cast<Eigen::Index>(r), col) = values[r];
      }
    }
  }
  return x;
}

GmModel FitGaussianMultivariate(const data::Table& train) {
  if (train.num_rows() < 2) {
    throw Error(ErrorCode::kTooFewRows,
                "Gaussian multivariate fit needs at least 2 rows");
  }
  const Eigen::MatrixXd x = LabelEncode(train);
  GmModel model;
  model.schema = data::WithObservedRanges(train.schema(), train);
  model.mean = x.colwise().mean().transpose();
  model.covariance = RepairPositiveDefinite(SampleCovariance(x));
  return model;
}

data::Table SampleGaussianMultivariate(const GmModel& model, std::size_t n,
                                       std::uint64_t seed) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "sample size must be positive");
  }
  const MultivariateNormalSampler sampler(model.mean, model.covariance);
  const std::vector<data::ColumnSpec>& columns = model.schema.columns;
  Rng rng(seed);
  std::vector<data::Record> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::VectorXd draw = sampler.Draw(rng);
    data::Record record;
    record.reserve(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const data::ColumnSpec& column = columns[c];
      const double value = draw[static_cast<Eigen::Index>(c)];
      if (column.is_categorical()) {
        const double top = static_cast<double>(column.categories.size()) - 1.0;
        const double code = std::clamp(std::round(value), 0.0, top);
        record.emplace_back(column.categories[static_cast<std::size_t>(code)]);
      } else {
        record.emplace_back(
            std::clamp(value, column.observed_min, column.observed_max));
      }
    }
    rows.push_back(std::move(record));
  }
  return data::Table(model.schema, std::move(rows));
}

}  // namespace synthbench::generators
