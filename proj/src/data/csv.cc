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

#include "synthbench/data/csv.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "synthbench/error.h"

namespace synthbench::data {
namespace {

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

// Reads one CSV record. Returns false at end of input. A record consisting
// of a zero-length line is reported as an empty field list.
bool ReadRecord(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string field;
  bool quoted = false;
  bool any_char = false;
  char c;
  while (in.get(c)) {
    any_char = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      if (in.peek() == '\n') in.get(c);
      break;
    } else if (c == '\n') {
      break;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) {
    throw Error(ErrorCode::kRaggedRow, "unterminated quoted field");
  }
  if (!any_char) return false;
  if (!fields.empty() || !field.empty()) fields.push_back(std::move(field));
  return true;
}

bool NeedsQuoting(std::string_view text) {
  if (text.find_first_of(",\"\r\n") != std::string_view::npos) return true;
  return !text.empty() && (text.front() == ' ' || text.back() == ' ' ||
                           text.front() == '\t' || text.back() == '\t');
}

void AppendField(std::string& out, std::string_view text) {
  if (!NeedsQuoting(text)) {
    out.append(text);
    return;
  }
  out.push_back('"');
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

// Numeric labels sort by value, anything else lexicographically.
std::vector<std::string> OrderCategories(const std::set<std::string>& labels) {
  std::vector<std::string> ordered(labels.begin(), labels.end());
  std::vector<std::pair<double, std::string>> numeric;
  for (const std::string& label : ordered) {
    auto value = ParseReal(label);
    if (!value) return ordered;
    numeric.emplace_back(*value, label);
  }
  std::sort(numeric.begin(), numeric.end());
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    ordered[i] = numeric[i].second;
  }
  return ordered;
}

}  // namespace

std::optional<double> ParseReal(std::string_view text) {
  text = Trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string FormatReal(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

RawTable ParseCsv(std::istream& in) {
  RawTable raw;
  std::vector<std::string> fields;
  if (!ReadRecord(in, raw.header) || raw.header.empty()) {
    throw Error(ErrorCode::kEmptyInput, "CSV has no header row");
  }
  // Tolerate a UTF-8 byte order mark.
  if (raw.header[0].starts_with("\xEF\xBB\xBF")) {
    raw.header[0].erase(0, 3);
  }
  std::size_t line = 1;
  while (ReadRecord(in, fields)) {
    ++line;
    if (fields.empty()) continue;
    if (fields.size() != raw.header.size()) {
      throw Error(ErrorCode::kRaggedRow,
                  "record " + std::to_string(line) + " has " +
                      std::to_string(fields.size()) + " fields, header has " +
                      std::to_string(raw.header.size()));
    }
    raw.rows.push_back(fields);
  }
  return raw;
}

Schema InferSchema(const RawTable& raw) {
  Schema schema;
  for (std::size_t c = 0; c < raw.header.size(); ++c) {
    ColumnSpec column;
    column.name = raw.header[c];
    std::set<std::string> labels;
    std::set<double> values;
    bool numeric = true;
    for (const auto& row : raw.rows) {
      const std::string& text = row[c];
      if (text.empty()) continue;
      labels.insert(text);
      if (numeric) {
        if (auto value = ParseReal(text)) {
          values.insert(*value);
        } else {
          numeric = false;
        }
      }
    }
    if (labels.empty()) {
      throw Error(ErrorCode::kAllMissingColumn,
                  "column '" + column.name + "' has no non-missing values");
    }
    if (numeric && values.size() > kMaxCategoricalDistinct) {
      column.kind = ColumnKind::kContinuous;
      column.observed_min = *values.begin();
      column.observed_max = *values.rbegin();
    } else {
      column.kind =
          labels.size() <= 2 ? ColumnKind::kBinary : ColumnKind::kMulticlass;
      column.categories = OrderCategories(labels);
    }
    schema.columns.push_back(std::move(column));
  }
  schema.Validate();
  return schema;
}

Table TypeTable(const RawTable& raw, const std::optional<Schema>& provided,
                const LoadOptions& options) {
  if (raw.rows.empty()) {
    throw Error(ErrorCode::kEmptyInput, "CSV has no data rows");
  }
  Schema schema = provided ? *provided : InferSchema(raw);
  if (provided) {
    if (schema.columns.size() != raw.header.size()) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "schema has " + std::to_string(schema.columns.size()) +
                      " columns, CSV header has " +
                      std::to_string(raw.header.size()));
    }
    for (std::size_t c = 0; c < raw.header.size(); ++c) {
      if (schema.columns[c].name != raw.header[c]) {
        throw Error(ErrorCode::kSchemaMismatch,
                    "header column " + std::to_string(c) + " is '" +
                        raw.header[c] + "', schema expects '" +
                        schema.columns[c].name + "'");
      }
      ColumnSpec& column = schema.columns[c];
      if (column.is_categorical() && column.categories.empty()) {
        std::set<std::string> labels;
        for (const auto& row : raw.rows) {
          if (!row[c].empty()) labels.insert(row[c]);
        }
        column.categories = OrderCategories(labels);
      }
    }
    schema.Validate();
  }

  // Per-column problems: column -> (problem -> count).
  std::map<std::size_t, std::map<std::string, std::size_t>> problems;
  std::vector<Record> rows;
  rows.reserve(raw.rows.size());
  for (const auto& fields : raw.rows) {
    Record record;
    record.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const std::string& text = fields[c];
      const ColumnSpec& column = schema.columns[c];
      if (text.empty()) {
        record.emplace_back(Missing{});
      } else if (column.is_categorical()) {
        if (column.CategoryIndex(text)) {
          record.emplace_back(text);
        } else {
          ++problems[c]["unknown category '" + text + "'"];
          record.emplace_back(Missing{});
        }
      } else if (auto value = ParseReal(text)) {
        record.emplace_back(*value);
      } else {
        if (options.strict_continuous) {
          ++problems[c]["unparseable real '" + text + "'"];
        }
        record.emplace_back(Missing{});
      }
    }
    rows.push_back(std::move(record));
  }
  if (!problems.empty()) {
    std::ostringstream message;
    bool first = true;
    for (const auto& [col, issues] : problems) {
      for (const auto& [issue, count] : issues) {
        if (!first) message << "; ";
        first = false;
        message << "column '" << schema.columns[col].name << "': " << issue
                << " (" << count << (count == 1 ? " cell)" : " cells)");
      }
    }
    throw Error(ErrorCode::kSchemaMismatch, message.str());
  }
  Table typed(schema, std::move(rows));
  return Table(WithObservedRanges(typed.schema(), typed), typed.rows());
}

Table LoadTable(std::istream& in, const std::optional<Schema>& schema,
                const LoadOptions& options) {
  return TypeTable(ParseCsv(in), schema, options);
}

Table LoadTableFile(const std::filesystem::path& path,
                    const std::optional<Schema>& schema,
                    const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  }
  return LoadTable(in, schema, options);
}

std::string WriteCsv(const Table& table) {
  std::string out;
  const Schema& schema = table.schema();
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (c > 0) out.push_back(',');
    AppendField(out, schema.columns[c].name);
  }
  out.push_back('\n');
  for (const Record& record : table.rows()) {
    for (std::size_t c = 0; c < record.size(); ++c) {
      if (c > 0) out.push_back(',');
      const Cell& cell = record[c];
      if (const auto* value = std::get_if<double>(&cell)) {
        out.append(FormatReal(*value));
      } else if (const auto* label = std::get_if<std::string>(&cell)) {
        AppendField(out, *label);
      }
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace synthbench::data
