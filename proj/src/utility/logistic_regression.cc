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

#include "synthbench/utility/logistic_regression.h"

#include <cmath>

namespace synthbench::utility {
namespace {

data::RowMatrix Logits(const Eigen::MatrixXd& w, const data::RowMatrix& x) {
  const Eigen::Index d = x.cols();
  data::RowMatrix z = x * w.topRows(d);
  z.rowwise() += w.row(d);
  return z;
}

}  // namespace

data::RowMatrix SoftmaxScores(const Eigen::MatrixXd& weights,
                              const data::RowMatrix& x) {
  data::RowMatrix z = Logits(weights, x);
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    z.row(i).array() -= z.row(i).maxCoeff();
    z.row(i) = z.row(i).array().exp();
    z.row(i) /= z.row(i).sum();
  }
  return z;
}

double LogisticLoss(const Eigen::MatrixXd& weights, const data::RowMatrix& x,
                    std::span<const int> y, double l2) {
  const data::RowMatrix z = Logits(weights, x);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    const double m = z.row(i).maxCoeff();
    const double lse = m + std::log((z.row(i).array() - m).exp().sum());
    loss += lse - z(i, y[static_cast<std::size_t>(i)]);
  }
  loss /= static_cast<double>(z.rows());
  return loss + 0.5 * l2 * weights.topRows(x.cols()).squaredNorm();
}

Eigen::MatrixXd LogisticGradient(const Eigen::MatrixXd& weights,
                                 const data::RowMatrix& x,
                                 std::span<const int> y, double l2) {
  data::RowMatrix residual = SoftmaxScores(weights, x);
  for (Eigen::Index i = 0; i < residual.rows(); ++i) {
    residual(i, y[static_cast<std::size_t>(i)]) -= 1.0;
  }
  const double inv_n = 1.0 / static_cast<double>(x.rows());
  const Eigen::Index d = x.cols();
  Eigen::MatrixXd grad(d + 1, weights.cols());
  grad.topRows(d) = inv_n * (x.transpose() * residual) + l2 * weights.topRows(d);
  grad.row(d) = inv_n * residual.colwise().sum();
  return grad;
}

LogisticRegression LogisticRegression::Fit(const data::RowMatrix& x,
                                           std::span<const int> y,
                                           std::size_t n_classes,
                                           const Options& options) {
  LogisticRegression model;
  Eigen::MatrixXd w =
      Eigen::MatrixXd::Zero(x.cols() + 1, static_cast<Eigen::Index>(n_classes));
  double step = options.step;
  double loss = LogisticLoss(w, x, y, options.l2);
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    const Eigen::MatrixXd grad = LogisticGradient(w, x, y, options.l2);
    if (grad.norm() < options.gradient_tolerance) break;
    bool accepted = false;
    while (step > 1e-12) {
      Eigen::MatrixXd candidate = w - step * grad;
      const double next = LogisticLoss(candidate, x, y, options.l2);
      if (next <= loss) {
        w = std::move(candidate);
        loss = next;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  model.weights_ = std::move(w);
  model.iterations_ = it;
  return model;
}

data::RowMatrix LogisticRegression::PredictProba(
    const data::RowMatrix& x) const {
  return SoftmaxScores(weights_, x);
}

}  // namespace synthbench::utility
