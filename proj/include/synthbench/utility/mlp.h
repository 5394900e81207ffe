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

#ifndef SYNTHBENCH_UTILITY_MLP_H_
#define SYNTHBENCH_UTILITY_MLP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "synthbench/data/encoding.h"

namespace synthbench::utility {

// One ReLU hidden layer and a softmax output.
struct MlpParameters {
  Eigen::MatrixXd w1;  // features x hidden
  Eigen::RowVectorXd b1;
  Eigen::MatrixXd w2;  // hidden x classes
  Eigen::RowVectorXd b2;

  std::vector<double> Flatten() const;
  static MlpParameters Unflatten(std::span<const double> flat,
                                 std::size_t features, std::size_t hidden,
                                 std::size_t classes);
};

data::RowMatrix MlpForward(const MlpParameters& p, const data::RowMatrix& x);

// Mean cross-entropy of the labels under the network output.
double MlpLoss(const MlpParameters& p, const data::RowMatrix& x,
               std::span<const int> y);

// Backpropagated gradient of MlpLoss, in parameter layout.
MlpParameters MlpGradient(const MlpParameters& p, const data::RowMatrix& x,
                          std::span<const int> y);

class Mlp {
 public:
  struct Options {
    std::size_t hidden = 64;
    std::size_t batch_size = 32;
    double momentum = 0.9;
    double step = 0.01;
    int epochs = 200;
  };

  static Mlp Fit(const data::RowMatrix& x, std::span<const int> y,
                 std::size_t n_classes, std::uint64_t seed,
                 const Options& options);
  static Mlp Fit(const data::RowMatrix& x, std::span<const int> y,
                 std::size_t n_classes, std::uint64_t seed) {
    return Fit(x, y, n_classes, seed, Options{});
  }

  data::RowMatrix PredictProba(const data::RowMatrix& x) const {
    return MlpForward(params_, x);
  }
  const MlpParameters& parameters() const { return params_; }

  // He-style normal initialization used by Fit.
  static MlpParameters Initialize(std::size_t features, std::size_t hidden,
                                  std::size_t classes, std::uint64_t seed);

 private:
  MlpParameters params_;
};

}  // namespace synthbench::utility

#endif  // SYNTHBENCH_UTILITY_MLP_H_
