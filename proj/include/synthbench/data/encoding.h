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

#ifndef SYNTHBENCH_DATA_ENCODING_H_
#define SYNTHBENCH_DATA_ENCODING_H_

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "synthbench/data/table.h"

namespace synthbench::data {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// One output feature: a continuous column, or one category of a categorical
// column.
struct FeatureRole {
  std::size_t source_column = 0;
  std::optional<std::size_t> category;

  friend bool operator==(const FeatureRole&, const FeatureRole&) = default;
};

struct ColumnScaling {
  std::size_t source_column = 0;
  double min = 0.0;
  double max = 0.0;
};

struct EncodedMatrix {
  RowMatrix values;
  std::vector<FeatureRole> feature_map;
  std::vector<ColumnScaling> scaling;

  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t features() const {
    return static_cast<std::size_t>(values.cols());
  }
};

// One-hot for categoricals, min-max for continuous columns, with statistics
// taken from the fit table. Out-of-range values clamp to [0, 1]; a constant
// column (min == max) maps to 0; unseen categories yield an all-zero block.
class Encoder {
 public:
  static Encoder Fit(const Table& fit_table);

  // Throws kSchemaMismatch for an incompatible schema or a missing cell.
  EncodedMatrix Transform(const Table& table) const;

  const Schema& schema() const { return schema_; }
  const std::vector<FeatureRole>& feature_map() const { return feature_map_; }
  const std::vector<ColumnScaling>& scaling() const { return scaling_; }

  // Min-max scaled value of a continuous cell for source column `col`.
  double Scale(std::size_t col, double value) const;

 private:
  Schema schema_;
  std::vector<FeatureRole> feature_map_;
  std::vector<ColumnScaling> scaling_;
  // Index into scaling_ per source column (continuous only).
  std::vector<std::optional<std::size_t>> scaling_index_;
};

EncodedMatrix Encode(const Table& table, const Table& fit_table);

}  // namespace synthbench::data

#endif  // SYNTHBENCH_DATA_ENCODING_H_
