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

#include "synthbench/data/preprocess.h"

#include <cmath>

#include "synthbench/error.h"
#include "synthbench/random.h"

namespace synthbench::data {

Table DropMissing(const Table& table) {
  std::vector<Record> kept;
  kept.reserve(table.num_rows());
  for (const Record& record : table.rows()) {
    bool complete = true;
    for (const Cell& cell : record) {
      if (IsMissing(cell)) {
        complete = false;
        break;
      }
    }
    if (complete) kept.push_back(record);
  }
  return Table(table.schema(), std::move(kept));
}

Split SplitTable(const Table& table, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "train fraction must lie in (0, 1)");
  }
  const std::size_t n = table.num_rows();
  if (n < 2) {
    throw Error(ErrorCode::kTooFewRows,
                "split needs at least 2 rows, got " + std::to_string(n));
  }
  Rng rng(seed);
  const std::vector<std::size_t> order = rng.Permutation(n);
  const auto n_train = static_cast<std::size_t>(
      std::floor(train_fraction * static_cast<double>(n)));

  std::vector<Record> train;
  std::vector<Record> eval;
  train.reserve(n_train);
  eval.reserve(n - n_train);
  for (std::size_t i = 0; i < n; ++i) {
    (i < n_train ? train : eval).push_back(table.rows()[order[i]]);
  }
  return {Table(table.schema(), std::move(train)),
          Table(table.schema(), std::move(eval))};
}

}  // namespace synthbench::data
