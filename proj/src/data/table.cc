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

#include "synthbench/data/table.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "synthbench/error.h"

namespace synthbench::data {

std::string_view ColumnKindName(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::kContinuous: return "continuous";
    case ColumnKind::kBinary: return "binary";
    case ColumnKind::kMulticlass: return "multiclass";
  }
  return "unknown";
}

ColumnKind ParseColumnKind(std::string_view name) {
  if (name == "continuous") return ColumnKind::kContinuous;
  if (name == "binary") return ColumnKind::kBinary;
  if (name == "multiclass") return ColumnKind::kMulticlass;
  throw Error(ErrorCode::kSchemaMismatch,
              "unknown column kind '" + std::string(name) + "'");
}

std::optional<std::size_t> ColumnSpec::CategoryIndex(
    std::string_view label) const {
  for (std::size_t i = 0; i < categories.size(); ++i) {
    if (categories[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Schema::FindColumn(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Schema::IndexOf(std::string_view name) const {
  auto index = FindColumn(name);
  if (!index) {
    throw Error(ErrorCode::kSchemaMismatch,
                "no column named '" + std::string(name) + "'");
  }
  return *index;
}

void Schema::Validate() const {
  std::set<std::string_view> names;
  for (const ColumnSpec& column : columns) {
    if (!names.insert(column.name).second) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "duplicate column name '" + column.name + "'");
    }
    if (column.is_categorical()) {
      std::set<std::string_view> labels;
      for (const std::string& label : column.categories) {
        if (label.empty()) {
          throw Error(ErrorCode::kSchemaMismatch,
                      "column '" + column.name + "': empty category label");
        }
        if (!labels.insert(label).second) {
          throw Error(ErrorCode::kSchemaMismatch,
                      "column '" + column.name + "': duplicate category '" +
                          label + "'");
        }
      }
      if (column.kind == ColumnKind::kBinary && column.categories.size() > 2) {
        throw Error(ErrorCode::kSchemaMismatch,
                    "column '" + column.name +
                        "': binary column with more than 2 categories");
      }
    } else {
      if (!column.categories.empty()) {
        throw Error(ErrorCode::kSchemaMismatch,
                    "column '" + column.name +
                        "': continuous column with categories");
      }
      if (column.observed_min > column.observed_max) {
        throw Error(ErrorCode::kSchemaMismatch,
                    "column '" + column.name + "': observed_min > observed_max");
      }
    }
  }
  if (target && !FindColumn(*target)) {
    throw Error(ErrorCode::kSchemaMismatch,
                "target '" + *target + "' is not a column");
  }
}

bool Schema::CompatibleWith(const Schema& other) const {
  if (columns.size() != other.columns.size() || target != other.target) {
    return false;
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const ColumnSpec& a = columns[i];
    const ColumnSpec& b = other.columns[i];
    if (a.name != b.name || a.kind != b.kind || a.categories != b.categories) {
      return false;
    }
  }
  return true;
}

Table::Table(Schema schema, std::vector<Record> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  schema_.Validate();
  const std::size_t width = schema_.size();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Record& record = rows_[r];
    if (record.size() != width) {
      throw Error(ErrorCode::kRaggedRow,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(record.size()) + " cells, expected " +
                      std::to_string(width));
    }
    for (std::size_t c = 0; c < width; ++c) {
      const Cell& cell = record[c];
      if (IsMissing(cell)) continue;
      const ColumnSpec& column = schema_.columns[c];
      if (column.is_categorical()) {
        const auto* label = std::get_if<std::string>(&cell);
        if (label == nullptr || !column.CategoryIndex(*label)) {
          throw Error(ErrorCode::kSchemaMismatch,
                      "row " + std::to_string(r) + ", column '" + column.name +
                          "': cell is not a known category");
        }
      } else {
        const auto* value = std::get_if<double>(&cell);
        if (value == nullptr || !std::isfinite(*value)) {
          throw Error(ErrorCode::kSchemaMismatch,
                      "row " + std::to_string(r) + ", column '" + column.name +
                          "': cell is not a finite real");
        }
      }
    }
  }
}

bool Table::HasMissing() const {
  for (const Record& record : rows_) {
    for (const Cell& cell : record) {
      if (IsMissing(cell)) return true;
    }
  }
  return false;
}

bool operator==(const Table& a, const Table& b) {
  return a.schema_.CompatibleWith(b.schema_) && a.rows_ == b.rows_;
}

DatasetSummary Summarize(const Table& table) {
  DatasetSummary summary;
  summary.n_rows = table.num_rows();
  for (const ColumnSpec& column : table.schema().columns) {
    switch (column.kind) {
      case ColumnKind::kContinuous: ++summary.n_continuous; break;
      case ColumnKind::kBinary: ++summary.n_binary; break;
      case ColumnKind::kMulticlass: ++summary.n_multiclass; break;
    }
  }
  const auto& target = table.schema().target;
  if (!target) return summary;
  const std::size_t col = table.schema().IndexOf(*target);
  if (!table.schema().columns[col].is_categorical()) return summary;

  std::map<std::string, std::size_t> counts;
  for (const Record& record : table.rows()) {
    if (const auto* label = std::get_if<std::string>(&record[col])) {
      ++counts[*label];
    }
  }
  if (counts.empty()) return summary;
  std::size_t minority = table.num_rows();
  std::size_t majority = 0;
  for (const auto& [label, count] : counts) {
    minority = std::min(minority, count);
    majority = std::max(majority, count);
  }
  summary.imbalance_ratio =
      static_cast<double>(minority) / static_cast<double>(majority);
  return summary;
}

std::pair<double, double> ObservedRange(const Table& table, std::size_t col) {
  bool seen = false;
  double lo = 0.0;
  double hi = 0.0;
  for (const Record& record : table.rows()) {
    const auto* value = std::get_if<double>(&record[col]);
    if (value == nullptr) continue;
    if (!seen) {
      lo = hi = *value;
      seen = true;
    } else {
      lo = std::min(lo, *value);
      hi = std::max(hi, *value);
    }
  }
  return {lo, hi};
}

Schema WithObservedRanges(const Schema& schema, const Table& table) {
  Schema out = schema;
  for (std::size_t c = 0; c < out.columns.size(); ++c) {
    if (out.columns[c].is_categorical()) continue;
    auto [lo, hi] = ObservedRange(table, c);
    out.columns[c].observed_min = lo;
    out.columns[c].observed_max = hi;
  }
  return out;
}

std::vector<int> CategoryCodes(const Table& table, std::size_t col) {
  const ColumnSpec& column = table.schema().columns.at(col);
  std::vector<int> codes;
  codes.reserve(table.num_rows());
  for (const Record& record : table.rows()) {
    const auto* label = std::get_if<std::string>(&record[col]);
    if (label == nullptr) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "column '" + column.name + "' has a missing cell");
    }
    codes.push_back(static_cast<int>(*column.CategoryIndex(*label)));
  }
  return codes;
}

std::vector<double> ContinuousValues(const Table& table, std::size_t col) {
  std::vector<double> values;
  values.reserve(table.num_rows());
  for (const Record& record : table.rows()) {
    const auto* value = std::get_if<double>(&record[col]);
    if (value == nullptr) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "column '" + table.schema().columns.at(col).name +
                      "' has a missing or non-real cell");
    }
    values.push_back(*value);
  }
  return values;
}

}  // namespace synthbench::data
