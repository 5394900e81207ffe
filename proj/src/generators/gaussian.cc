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

#include "synthbench/generators/gaussian.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "synthbench/error.h"

namespace synthbench::generators {

Eigen::MatrixXd SampleCovariance(const Eigen::MatrixXd& x) {
  const Eigen::Index n = x.rows();
  if (n < 2) {
    throw Error(ErrorCode::kTooFewRows, "covariance needs at least 2 rows");
  }
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - mean;
  return (centered.transpose() * centered) / static_cast<double>(n - 1);
}

double MinEigenvalue(const Eigen::MatrixXd& symmetric) {
  if (symmetric.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      symmetric, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Eigen::MatrixXd RepairPositiveDefinite(const Eigen::MatrixXd& matrix,
                                       double floor) {
  Eigen::MatrixXd sym = 0.5 * (matrix + matrix.transpose());
  if (sym.size() == 0) return sym;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();
  if (eigenvalues.minCoeff() >= floor) return sym;
  const Eigen::VectorXd clipped = eigenvalues.cwiseMax(floor);
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  Eigen::MatrixXd repaired =
      vectors * clipped.asDiagonal() * vectors.transpose();
  return 0.5 * (repaired + repaired.transpose());
}

Eigen::MatrixXd RepairCorrelation(const Eigen::MatrixXd& matrix,
                                  double floor) {
  Eigen::MatrixXd repaired = RepairPositiveDefinite(matrix, floor);
  const Eigen::Index d = repaired.rows();
  if (d == 0) return repaired;
  const Eigen::VectorXd inv_sd = repaired.diagonal().cwiseSqrt().cwiseInverse();
  repaired = inv_sd.asDiagonal() * repaired * inv_sd.asDiagonal();
  repaired = 0.5 * (repaired + repaired.transpose());
  repaired.diagonal().setOnes();
  const double lambda = MinEigenvalue(repaired);
  if (lambda < floor) {
    // Blending with the identity keeps the unit diagonal and lifts every
    // eigenvalue by alpha * (1 - lambda_i).
    const double alpha = (floor - lambda) / (1.0 - lambda);
    repaired = (1.0 - alpha) * repaired +
               alpha * Eigen::MatrixXd::Identity(d, d);
    repaired.diagonal().setOnes();
  }
  return repaired;
}

double NormalCdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double NormalQuantile(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "normal quantile needs u in (0, 1)");
  }
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * u);
}

MultivariateNormalSampler::MultivariateNormalSampler(
    Eigen::VectorXd mean, const Eigen::MatrixXd& covariance)
    : mean_(std::move(mean)) {
  Eigen::LLT<Eigen::MatrixXd> llt(covariance);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidArgument,
                "covariance is not positive definite");
  }
  lower_ = llt.matrixL();
}

Eigen::VectorXd MultivariateNormalSampler::Draw(Rng& rng) const {
  Eigen::VectorXd z(mean_.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.Normal();
  return mean_ + lower_.triangularView<Eigen::Lower>() * z;
}

}  // namespace synthbench::generators
