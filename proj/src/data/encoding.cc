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

#include "synthbench/data/encoding.h"

#include <algorithm>

#include "synthbench/error.h"

namespace synthbench::data {

Encoder Encoder::Fit(const Table& fit_table) {
  Encoder encoder;
  encoder.schema_ = fit_table.schema();
  const Schema& schema = encoder.schema_;
  encoder.scaling_index_.assign(schema.size(), std::nullopt);
  for (std::size_t c = 0; c < schema.size(); ++c) {
    const ColumnSpec& column = schema.columns[c];
    if (column.is_categorical()) {
      for (std::size_t k = 0; k < column.categories.size(); ++k) {
        encoder.feature_map_.push_back({c, k});
      }
    } else {
      auto [lo, hi] = ObservedRange(fit_table, c);
      encoder.scaling_index_[c] = encoder.scaling_.size();
      encoder.scaling_.push_back({c, lo, hi});
      encoder.feature_map_.push_back({c, std::nullopt});
    }
  }
  return encoder;
}

double Encoder::Scale(std::size_t col, double value) const {
  const ColumnScaling& s = scaling_.at(*scaling_index_.at(col));
  if (s.max <= s.min) return 0.0;
  return std::clamp((value - s.min) / (s.max - s.min), 0.0, 1.0);
}

EncodedMatrix Encoder::Transform(const Table& table) const {
  if (!table.schema().CompatibleWith(schema_)) {
    throw Error(ErrorCode::kSchemaMismatch,
                "table schema differs from the encoder's fit schema");
  }
  EncodedMatrix out;
  out.feature_map = feature_map_;
  out.scaling = scaling_;
  out.values = RowMatrix::Zero(static_cast<Eigen::Index>(table.num_rows()),
                               static_cast<Eigen::Index>(feature_map_.size()));
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    const Record& record = table.rows()[r];
    Eigen::Index feature = 0;
    for (std::size_t c = 0; c < schema_.size(); ++c) {
      const ColumnSpec& column = schema_.columns[c];
      const Cell& cell = record[c];
      if (IsMissing(cell)) {
        throw Error(ErrorCode::kSchemaMismatch,
                    "row " + std::to_string(r) + ", column '" + column.name +
                        "' is missing; drop missing rows before encoding");
      }
      if (column.is_categorical()) {
        if (auto k = column.CategoryIndex(std::get<std::string>(cell))) {
          out.values(static_cast<Eigen::Index>(r),
                     feature + static_cast<Eigen::Index>(*k)) = 1.0;
        }
        feature += static_cast<Eigen::Index>(column.categories.size());
      } else {
        out.values(static_cast<Eigen::Index>(r), feature) =
            Scale(c, std::get<double>(cell));
        ++feature;
      }
    }
  }
  return out;
}

EncodedMatrix Encode(const Table& table, const Table& fit_table) {
  return Encoder::Fit(fit_table).Transform(table);
}

}  // namespace synthbench::data
