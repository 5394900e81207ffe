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

#ifndef SYNTHBENCH_GENERATORS_GAUSSIAN_H_
#define SYNTHBENCH_GENERATORS_GAUSSIAN_H_

#include <Eigen/Dense>

#include "synthbench/random.h"

namespace synthbench::generators {

inline constexpr double kEigenvalueFloor = 1e-6;

// Unbiased (n - 1) sample covariance of the rows of `x`.
Eigen::MatrixXd SampleCovariance(const Eigen::MatrixXd& x);

// Symmetrizes, clips eigenvalues below `floor`, and re-symmetrizes. Returns
// the symmetrized input unchanged when it is already above the floor.
Eigen::MatrixXd RepairPositiveDefinite(const Eigen::MatrixXd& matrix,
                                       double floor = kEigenvalueFloor);

// As RepairPositiveDefinite, then restores a unit diagonal while keeping the
// minimum eigenvalue at or above `floor`.
Eigen::MatrixXd RepairCorrelation(const Eigen::MatrixXd& matrix,
                                  double floor = kEigenvalueFloor);

double MinEigenvalue(const Eigen::MatrixXd& symmetric);

double NormalCdf(double z);
// Inverse of NormalCdf on (0, 1).
double NormalQuantile(double u);

// Draws rows of N(mean, covariance). `covariance` must be positive definite.
class MultivariateNormalSampler {
 public:
  MultivariateNormalSampler(Eigen::VectorXd mean,
                            const Eigen::MatrixXd& covariance);

  Eigen::VectorXd Draw(Rng& rng) const;

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd lower_;
};

}  // namespace synthbench::generators

#endif  // SYNTHBENCH_GENERATORS_GAUSSIAN_H_
