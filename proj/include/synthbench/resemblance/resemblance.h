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

#ifndef SYNTHBENCH_RESEMBLANCE_RESEMBLANCE_H_
#define SYNTHBENCH_RESEMBLANCE_RESEMBLANCE_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "synthbench/data/table.h"

namespace synthbench::resemblance {

// Label -> count (or weight). Relative frequencies are taken internally.
using Histogram = std::map<std::string, double>;

Histogram ColumnHistogram(const data::Table& table, std::size_t col);

// Base-2 Jensen-Shannon divergence of two aligned probability vectors, with
// 0 log 0 = 0. Lies in [0, 1] and is symmetric.
double JensenShannonDivergence(std::span<const double> p,
                               std::span<const double> q);

// JSD over the union of both label sets. Throws kEmptyColumn when either
// histogram has no mass.
double JsdCategorical(const Histogram& real, const Histogram& synthetic);

// Exact W1 distance between two empirical distributions, integrating
// |F_a - F_b| over the merged sorted support. Throws kEmptyColumn.
double Wasserstein1d(std::span<const double> a, std::span<const double> b);

// Theil's uncertainty coefficient U(x | y) = (H(x) - H(x | y)) / H(x);
// 1 when H(x) = 0.
double TheilsU(std::span<const int> x, std::span<const int> y);

// Correlation ratio of a continuous variable grouped by a categorical one;
// 0 when the continuous variable is constant.
double CorrelationRatio(std::span<const int> categories,
                        std::span<const double> values);

// Entry (i, j): Pearson for two continuous columns, U(i | j) for two
// categorical columns, correlation ratio for mixed pairs. Diagonal is 1.
// Zero-variance continuous columns give 0 off-diagonal entries and append a
// note to `warnings`. Throws kTooFewRows below 2 rows.
Eigen::MatrixXd PairwiseCorrelationMatrix(
    const data::Table& table, std::vector<std::string>* warnings = nullptr);

// Frobenius norm of the difference. Throws kDimensionMismatch.
double CorrelationDifference(const Eigen::MatrixXd& real,
                             const Eigen::MatrixXd& synthetic);

struct ResemblanceReport {
  std::optional<double> avg_jsd;
  std::optional<double> avg_wd;
  double corr_diff = 0.0;
  std::map<std::string, double> per_column_jsd;
  std::map<std::string, double> per_column_wd;
  // Recorded so readers know the correlation difference is norm-dependent.
  std::string corr_norm = "frobenius";
  std::vector<std::string> warnings;
};

// WD runs on values min-max scaled with the real table's ranges.
ResemblanceReport EvaluateResemblance(const data::Table& real,
                                      const data::Table& synthetic);

}  // namespace synthbench::resemblance

#endif  // SYNTHBENCH_RESEMBLANCE_RESEMBLANCE_H_
