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

#ifndef SYNTHBENCH_DATA_CSV_H_
#define SYNTHBENCH_DATA_CSV_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "synthbench/data/table.h"

namespace synthbench::data {

// Continuous columns need more than this many distinct values when the
// schema is inferred.
inline constexpr std::size_t kMaxCategoricalDistinct = 10;

// RFC 4180: quoted fields, doubled quotes, CRLF or LF line endings. The first
// record is the header. Throws kEmptyInput (no header) or kRaggedRow.
RawTable ParseCsv(std::istream& in);

// Continuous iff every non-missing cell parses as a finite real and there
// are more than kMaxCategoricalDistinct distinct values; otherwise Binary
// (at most 2 distinct) or Multiclass. Throws kAllMissingColumn.
Schema InferSchema(const RawTable& raw);

struct LoadOptions {
  // Reject unparseable continuous cells instead of marking them missing.
  bool strict_continuous = false;
};

// Types a raw table. With no schema one is inferred. With a schema, header
// names must match and categorical cells must be known categories; an empty
// category list in the schema is filled from the data. Observed ranges of
// the returned schema come from the data. Throws kEmptyInput (no data rows),
// kSchemaMismatch.
Table TypeTable(const RawTable& raw, const std::optional<Schema>& schema,
                const LoadOptions& options = {});

Table LoadTable(std::istream& in, const std::optional<Schema>& schema = {},
                const LoadOptions& options = {});
// Throws kFileNotFound.
Table LoadTableFile(const std::filesystem::path& path,
                    const std::optional<Schema>& schema = {},
                    const LoadOptions& options = {});

// Inverse of LoadTable for a schema-valid table: LF line endings, missing
// cells empty, reals in shortest round-trip form.
std::string WriteCsv(const Table& table);

// Shortest decimal string that parses back to exactly `value`.
std::string FormatReal(double value);
// Full-string parse of a finite real; nullopt otherwise.
std::optional<double> ParseReal(std::string_view text);

}  // namespace synthbench::data

#endif  // SYNTHBENCH_DATA_CSV_H_
