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

#ifndef SYNTHBENCH_PRIVACY_DISTANCE_H_
#define SYNTHBENCH_PRIVACY_DISTANCE_H_

#include <optional>
#include <vector>

#include "synthbench/data/encoding.h"

namespace synthbench::privacy {

inline constexpr double kDefaultPercentile = 5.0;

// Lower nearest-rank percentile: sorted[floor(p / 100 * (n - 1))].
// Throws kEmptySet.
double Percentile(std::vector<double> values, double p);

struct Neighbors {
  double nearest = 0.0;
  double second = 0.0;  // +inf when the reference holds a single candidate
};

// Exact Euclidean nearest and second-nearest reference row per query row.
// With same_set the query row itself is skipped by index, so duplicate rows
// still count as distance 0.
std::vector<Neighbors> TwoNearest(const data::RowMatrix& query,
                                  const data::RowMatrix& reference,
                                  bool same_set);

// Throws kEmptySet or kFeatureMismatch.
double Dcr(const data::EncodedMatrix& query,
           const data::EncodedMatrix& reference,
           double percentile = kDefaultPercentile);
// Reference = the set itself minus the query row. Throws kTooFewReferences
// below two rows.
double DcrWithin(const data::EncodedMatrix& set,
                 double percentile = kDefaultPercentile);

// Nearest over second-nearest distance; rows with 0/0 are left out and the
// result is absent when every row is. Throws kTooFewReferences.
std::optional<double> Nndr(const data::EncodedMatrix& query,
                           const data::EncodedMatrix& reference,
                           double percentile = kDefaultPercentile);
std::optional<double> NndrWithin(const data::EncodedMatrix& set,
                                 double percentile = kDefaultPercentile);

bool ModelCollapseFlag(double dcr_within_real, double dcr_within_synth);

struct DistanceReport {
  double dcr_real_synth = 0.0;
  double dcr_within_real = 0.0;
  double dcr_within_synth = 0.0;
  std::optional<double> nndr_real_synth;
  std::optional<double> nndr_within_real;
  std::optional<double> nndr_within_synth;
  bool model_collapse = false;
};

// Synthetic rows are the queries against the real rows.
DistanceReport EvaluateDistances(const data::EncodedMatrix& real,
                                 const data::EncodedMatrix& synthetic);

}  // namespace synthbench::privacy

#endif  // SYNTHBENCH_PRIVACY_DISTANCE_H_
