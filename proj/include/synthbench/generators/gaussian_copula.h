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

#ifndef SYNTHBENCH_GENERATORS_GAUSSIAN_COPULA_H_
#define SYNTHBENCH_GENERATORS_GAUSSIAN_COPULA_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "synthbench/data/table.h"

namespace synthbench::generators {

// Empirical quantile function over the sorted training values. Order
// statistic k (0-based) sits at u = (k + 0.5) / n; inversion interpolates
// linearly between neighbours and saturates outside [1/(2n), 1 - 1/(2n)].
struct ContinuousEmpirical {
  std::vector<double> sorted_values;

  // Mid-rank (rank - 0.5) / n, using the average rank over ties.
  double ToUniform(double value) const;
  double FromUniform(double u) const;
};

// Each category owns [bound[k-1], bound[k]) sized by its training frequency.
// Only categories seen in training appear, so bounds are strictly increasing.
struct CategoricalIntervals {
  std::vector<std::string> categories;
  std::vector<double> frequencies;
  std::vector<double> cumulative_bounds;

  // Midpoint of the label's interval. Throws kSchemaMismatch when unseen.
  double ToUniform(const std::string& label) const;
  const std::string& FromUniform(double u) const;
};

using MarginalModel = std::variant<ContinuousEmpirical, CategoricalIntervals>;

struct GcModel {
  data::Schema schema;
  std::vector<MarginalModel> marginals;
  Eigen::MatrixXd copula_correlation;
};

// Frequencies in category order over the categories present in `labels`.
CategoricalIntervals FitCategoricalIntervals(const data::ColumnSpec& column,
                                             const std::vector<int>& codes);

// Throws kTooFewRows for fewer than 2 rows.
GcModel FitGaussianCopula(const data::Table& train);

data::Table SampleGaussianCopula(const GcModel& model, std::size_t n,
                                 std::uint64_t seed);

}  // namespace synthbench::generators

#endif  // SYNTHBENCH_GENERATORS_GAUSSIAN_COPULA_H_
