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

#ifndef SYNTHBENCH_UTILITY_LOGISTIC_REGRESSION_H_
#define SYNTHBENCH_UTILITY_LOGISTIC_REGRESSION_H_

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "synthbench/data/encoding.h"

namespace synthbench::utility {

// Multinomial (softmax) logistic regression fitted by full-batch gradient
// descent. Weights are (features + 1) x classes with the bias in the last row.
class LogisticRegression {
 public:
  struct Options {
    double l2 = 1e-3;
    double step = 0.1;
    double gradient_tolerance = 1e-6;
    int max_iterations = 1000;
  };

  static LogisticRegression Fit(const data::RowMatrix& x,
                                std::span<const int> y, std::size_t n_classes,
                                const Options& options);
  static LogisticRegression Fit(const data::RowMatrix& x,
                                std::span<const int> y,
                                std::size_t n_classes) {
    return Fit(x, y, n_classes, Options{});
  }

  data::RowMatrix PredictProba(const data::RowMatrix& x) const;

  const Eigen::MatrixXd& weights() const { return weights_; }
  int iterations() const { return iterations_; }

 private:
  Eigen::MatrixXd weights_;
  int iterations_ = 0;
};

// Row-wise softmax of x * W[:-1] + W[-1].
data::RowMatrix SoftmaxScores(const Eigen::MatrixXd& weights,
                              const data::RowMatrix& x);

// Mean cross-entropy plus l2/2 * |W|^2 over the non-bias rows.
double LogisticLoss(const Eigen::MatrixXd& weights, const data::RowMatrix& x,
                    std::span<const int> y, double l2);

Eigen::MatrixXd LogisticGradient(const Eigen::MatrixXd& weights,
                                 const data::RowMatrix& x,
                                 std::span<const int> y, double l2);

}  // namespace synthbench::utility

#endif  // SYNTHBENCH_UTILITY_LOGISTIC_REGRESSION_H_
