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

#ifndef SYNTHBENCH_DATA_PREPROCESS_H_
#define SYNTHBENCH_DATA_PREPROCESS_H_

#include <cstdint>
#include <utility>

#include "synthbench/data/table.h"

namespace synthbench::data {

// Listwise deletion: keeps rows with no missing cell, in order.
Table DropMissing(const Table& table);

struct Split {
  Table train;
  Table eval;
};

// Seeded uniform permutation; the first floor(train_fraction * n) permuted
// rows form the train split. Throws kTooFewRows (n < 2) or kInvalidArgument.
Split SplitTable(const Table& table, double train_fraction, std::uint64_t seed);

}  // namespace synthbench::data

#endif  // SYNTHBENCH_DATA_PREPROCESS_H_
