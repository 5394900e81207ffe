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

#ifndef SYNTHBENCH_DATA_TABLE_H_
#define SYNTHBENCH_DATA_TABLE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace synthbench::data {

enum class ColumnKind { kContinuous, kBinary, kMulticlass };

std::string_view ColumnKindName(ColumnKind kind);
// Accepts "continuous", "binary", "multiclass". Throws kSchemaMismatch.
ColumnKind ParseColumnKind(std::string_view name);

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::kContinuous;
  // Ordered labels; empty for continuous columns.
  std::vector<std::string> categories;
  // Range observed in the table this spec was built from (continuous only).
  double observed_min = 0.0;
  double observed_max = 0.0;

  bool is_categorical() const { return kind != ColumnKind::kContinuous; }
  std::optional<std::size_t> CategoryIndex(std::string_view label) const;
};

struct Schema {
  std::vector<ColumnSpec> columns;
  std::optional<std::string> target;

  std::size_t size() const { return columns.size(); }
  std::optional<std::size_t> FindColumn(std::string_view name) const;
  // Throws kSchemaMismatch when absent.
  std::size_t IndexOf(std::string_view name) const;

  // Names unique, target resolves, category labels unique, min <= max.
  void Validate() const;

  // Same names, kinds, categories, and target. Observed ranges are
  // descriptive and ignored.
  bool CompatibleWith(const Schema& other) const;
};

struct Missing {
  friend bool operator==(Missing, Missing) { return true; }
};

// A continuous cell holds a double, a categorical cell holds its label.
using Cell = std::variant<Missing, double, std::string>;
using Record = std::vector<Cell>;

inline bool IsMissing(const Cell& cell) {
  return std::holds_alternative<Missing>(cell);
}

// Rectangular, schema-conformant rows. Immutable after construction.
class Table {
 public:
  Table() = default;
  // Validates every cell against the schema. Throws kRaggedRow or
  // kSchemaMismatch.
  Table(Schema schema, std::vector<Record> rows);

  const Schema& schema() const { return schema_; }
  const std::vector<Record>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_columns() const { return schema_.size(); }

  double ContinuousAt(std::size_t row, std::size_t col) const {
    return std::get<double>(rows_[row][col]);
  }
  const std::string& CategoryAt(std::size_t row, std::size_t col) const {
    return std::get<std::string>(rows_[row][col]);
  }

  bool HasMissing() const;

  // Compatible schema and cell-for-cell equal rows.
  friend bool operator==(const Table& a, const Table& b);

 private:
  Schema schema_;
  std::vector<Record> rows_;
};

// Raw CSV contents before typing.
struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct DatasetSummary {
  std::size_t n_rows = 0;
  std::size_t n_continuous = 0;
  std::size_t n_binary = 0;
  std::size_t n_multiclass = 0;
  // Minority over majority class count; present only for categorical targets.
  std::optional<double> imbalance_ratio;
};

DatasetSummary Summarize(const Table& table);

// Continuous min/max over non-missing cells of `col`; (0, 0) when none.
std::pair<double, double> ObservedRange(const Table& table, std::size_t col);

// Copy of the schema with continuous observed ranges recomputed from `table`.
Schema WithObservedRanges(const Schema& schema, const Table& table);

// Categorical labels of column `col` as category indices. Throws on missing.
std::vector<int> CategoryCodes(const Table& table, std::size_t col);

// Continuous values of column `col`. Throws on missing.
std::vector<double> ContinuousValues(const Table& table, std::size_t col);

}  // namespace synthbench::data

#endif  // SYNTHBENCH_DATA_TABLE_H_
