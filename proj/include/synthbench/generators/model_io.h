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

#ifndef SYNTHBENCH_GENERATORS_MODEL_IO_H_
#define SYNTHBENCH_GENERATORS_MODEL_IO_H_

#include <filesystem>

#include "json.hpp"
#include "synthbench/data/table.h"
#include "synthbench/generators/gaussian_copula.h"
#include "synthbench/generators/gaussian_multivariate.h"

namespace synthbench::generators {

// Matrices are stored row-major as {"rows", "cols", "data"}.
nlohmann::json GmModelToJson(const GmModel& model);
GmModel GmModelFromJson(const nlohmann::json& json);
nlohmann::json GcModelToJson(const GcModel& model);
GcModel GcModelFromJson(const nlohmann::json& json);

// Reads a synthetic table produced elsewhere (e.g. a GAN toolkit) and checks
// it against the real schema: categories must be known, continuous cells
// must parse. Throws kFileNotFound or kSchemaMismatch with per-column
// diagnostics.
data::Table LoadExternalSynthetic(const std::filesystem::path& path,
                                  const data::Schema& schema);

}  // namespace synthbench::generators

#endif  // SYNTHBENCH_GENERATORS_MODEL_IO_H_
