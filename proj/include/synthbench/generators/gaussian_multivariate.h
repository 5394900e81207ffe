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

#ifndef SYNTHBENCH_GENERATORS_GAUSSIAN_MULTIVARIATE_H_
#define SYNTHBENCH_GENERATORS_GAUSSIAN_MULTIVARIATE_H_

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "synthbench/data/table.h"

namespace synthbench::generators {

// Default number of rows drawn for evaluation.
inline constexpr std::size_t kDefaultSampleRows = 5000;

// One Gaussian over every column. Categorical columns are label-encoded as
// their category index (the schema's category order is the label map).
struct GmModel {
  // Train schema with observed ranges taken from the train rows; sampled
  // continuous cells are clamped to these.
  data::Schema schema;
  Eigen::VectorXd mean;
  // PD-repaired sample covariance.
  Eigen::MatrixXd covariance;
};

// Label-encoded training matrix (rows x columns). Throws on missing cells.
Eigen::MatrixXd LabelEncode(const data::Table& table);

// Throws kTooFewRows for fewer than 2 rows.
GmModel FitGaussianMultivariate(const data::Table& train);

// Continuous draws are clamped to the observed range; categorical draws are
// rounded, clamped to [0, k - 1], and decoded.
data::Table SampleGaussianMultivariate(const GmModel& model, std::size_t n,
                                       std::uint64_t seed);

}  // namespace synthbench::generators

#endif  // SYNTHBENCH_GENERATORS_GAUSSIAN_MULTIVARIATE_H_
