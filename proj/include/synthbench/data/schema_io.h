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

#ifndef SYNTHBENCH_DATA_SCHEMA_IO_H_
#define SYNTHBENCH_DATA_SCHEMA_IO_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "synthbench/data/table.h"

namespace synthbench::data {

// Sidecar layout: {"columns": [{"name", "kind", "categories"?}], "target"?}.
nlohmann::json SchemaToJson(const Schema& schema);
Schema SchemaFromJson(const nlohmann::json& json);
Schema LoadSchemaFile(const std::filesystem::path& path);

}  // namespace synthbench::data

#endif  // SYNTHBENCH_DATA_SCHEMA_IO_H_
