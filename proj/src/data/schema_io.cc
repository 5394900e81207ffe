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

#include "synthbench/data/schema_io.h"

#include <fstream>

#include "synthbench/error.h"

namespace synthbench::data {

nlohmann::json SchemaToJson(const Schema& schema) {
  nlohmann::json columns = nlohmann::json::array();
  for (const ColumnSpec& column : schema.columns) {
    nlohmann::json entry = {{"name", column.name},
                            {"kind", std::string(ColumnKindName(column.kind))}};
    if (column.is_categorical()) {
      entry["categories"] = column.categories;
    } else {
      entry["observed_min"] = column.observed_min;
      entry["observed_max"] = column.observed_max;
    }
    columns.push_back(std::move(entry));
  }
  nlohmann::json out = {{"columns", std::move(columns)}};
  if (schema.target) out["target"] = *schema.target;
  return out;
}

Schema SchemaFromJson(const nlohmann::json& json) {
  try {
    Schema schema;
    for (const auto& entry : json.at("columns")) {
      ColumnSpec column;
      column.name = entry.at("name").get<std::string>();
      column.kind = ParseColumnKind(entry.at("kind").get<std::string>());
      if (entry.contains("categories")) {
        column.categories = entry.at("categories").get<std::vector<std::string>>();
      }
      column.observed_min = entry.value("observed_min", 0.0);
      column.observed_max = entry.value("observed_max", 0.0);
      schema.columns.push_back(std::move(column));
    }
    if (json.contains("target") && !json.at("target").is_null()) {
      schema.target = json.at("target").get<std::string>();
    }
    schema.Validate();
    return schema;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch,
                std::string("malformed schema JSON: ") + e.what());
  }
}

Schema LoadSchemaFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  }
  nlohmann::json json;
  try {
    in >> json;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch,
                path.string() + ": " + std::string(e.what()));
  }
  return SchemaFromJson(json);
}

}  // namespace synthbench::data
