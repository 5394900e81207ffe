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

#include "synthbench/utility/mlp.h"

#include <algorithm>
#include <cmath>

#include "synthbench/random.h"

namespace synthbench::utility {
namespace {

void SoftmaxInPlace(data::RowMatrix& z) {
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    z.row(i).array() -= z.row(i).maxCoeff();
    z.row(i) = z.row(i).array().exp();
    z.row(i) /= z.row(i).sum();
  }
}

struct Activations {
  data::RowMatrix hidden;  // post-ReLU
  data::RowMatrix logits;
};

Activations Forward(const MlpParameters& p, const data::RowMatrix& x) {
  Activations a;
  a.hidden = x * p.w1;
  a.hidden.rowwise() += p.b1;
  a.hidden = a.hidden.cwiseMax(0.0);
  a.logits = a.hidden * p.w2;
  a.logits.rowwise() += p.b2;
  return a;
}

MlpParameters Backward(const MlpParameters& p, const data::RowMatrix& input,
                       std::span<const int> y) {
  Activations a = Forward(p, input);
  data::RowMatrix delta = std::move(a.logits);
  SoftmaxInPlace(delta);
  for (Eigen::Index i = 0; i < delta.rows(); ++i) {
    delta(i, y[static_cast<std::size_t>(i)]) -= 1.0;
  }
  delta /= static_cast<double>(input.rows());
  MlpParameters g;
  g.w2 = a.hidden.transpose() * delta;
  g.b2 = delta.colwise().sum();
  data::RowMatrix back = delta * p.w2.transpose();
  back = back.cwiseProduct((a.hidden.array() > 0.0).cast<double>().matrix());
  g.w1 = input.transpose() * back;
  g.b1 = back.colwise().sum();
  return g;
}

}  // namespace

std::vector<double> MlpParameters::Flatten() const {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(w1.size() + b1.size() + w2.size() +
                                        b2.size()));
  for (Eigen::Index i = 0; i < w1.rows(); ++i)
    for (Eigen::Index j = 0; j < w1.cols(); ++j) flat.push_back(w1(i, j));
  for (Eigen::Index j = 0; j < b1.size(); ++j) flat.push_back(b1(j));
  for (Eigen::Index i = 0; i < w2.rows(); ++i)
    for (Eigen::Index j = 0; j < w2.cols(); ++j) flat.push_back(w2(i, j));
  for (Eigen::Index j = 0; j < b2.size(); ++j) flat.push_back(b2(j));
  return flat;
}

MlpParameters MlpParameters::Unflatten(std::span<const double> flat,
                                       std::size_t features,
                                       std::size_t hidden,
                                       std::size_t classes) {
  const auto d = static_cast<Eigen::Index>(features);
  const auto h = static_cast<Eigen::Index>(hidden);
  const auto k = static_cast<Eigen::Index>(classes);
  MlpParameters p;
  p.w1.resize(d, h);
  p.b1.resize(h);
  p.w2.resize(h, k);
  p.b2.resize(k);
  std::size_t at = 0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < h; ++j) p.w1(i, j) = flat[at++];
  for (Eigen::Index j = 0; j < h; ++j) p.b1(j) = flat[at++];
  for (Eigen::Index i = 0; i < h; ++i)
    for (Eigen::Index j = 0; j < k; ++j) p.w2(i, j) = flat[at++];
  for (Eigen::Index j = 0; j < k; ++j) p.b2(j) = flat[at++];
  return p;
}

data::RowMatrix MlpForward(const MlpParameters& p, const data::RowMatrix& x) {
  data::RowMatrix z = Forward(p, x).logits;
  SoftmaxInPlace(z);
  return z;
}

double MlpLoss(const MlpParameters& p, const data::RowMatrix& x,
               std::span<const int> y) {
  const data::RowMatrix z = Forward(p, x).logits;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    const double m = z.row(i).maxCoeff();
    loss += m + std::log((z.row(i).array() - m).exp().sum()) -
            z(i, y[static_cast<std::size_t>(i)]);
  }
  return loss / static_cast<double>(z.rows());
}

MlpParameters MlpGradient(const MlpParameters& p, const data::RowMatrix& x,
                          std::span<const int> y) {
  return Backward(p, x, y);
}

MlpParameters Mlp::Initialize(std::size_t features, std::size_t hidden,
                              std::size_t classes, std::uint64_t seed) {
  Rng rng(seed);
  const auto d = static_cast<Eigen::Index>(features);
  const auto h = static_cast<Eigen::Index>(hidden);
  const auto k = static_cast<Eigen::Index>(classes);
  MlpParameters p;
  p.w1.resize(d, h);
  p.w2.resize(h, k);
  const double s1 = std::sqrt(2.0 / static_cast<double>(std::max<Eigen::Index>(d, 1)));
  const double s2 = std::sqrt(1.0 / static_cast<double>(h));
  for (Eigen::Index i = 0; i < p.w1.size(); ++i) p.w1.data()[i] = s1 * rng.Normal();
  for (Eigen::Index i = 0; i < p.w2.size(); ++i) p.w2.data()[i] = s2 * rng.Normal();
  p.b1 = Eigen::RowVectorXd::Zero(h);
  p.b2 = Eigen::RowVectorXd::Zero(k);
  return p;
}

Mlp Mlp::Fit(const data::RowMatrix& x, std::span<const int> y,
             std::size_t n_classes, std::uint64_t seed,
             const Options& options) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(x.rows());
  Mlp model;
  model.params_ = Initialize(static_cast<std::size_t>(x.cols()), options.hidden,
                             n_classes, rng.NextU64());
  MlpParameters& p = model.params_;
  MlpParameters v;
  v.w1 = Eigen::MatrixXd::Zero(p.w1.rows(), p.w1.cols());
  v.b1 = Eigen::RowVectorXd::Zero(p.b1.size());
  v.w2 = Eigen::MatrixXd::Zero(p.w2.rows(), p.w2.cols());
  v.b2 = Eigen::RowVectorXd::Zero(p.b2.size());
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  data::RowMatrix batch;
  std::vector<int> batch_y;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    rng.Shuffle(std::span<std::size_t>(order));
    for (std::size_t start = 0; start < n; start += options.batch_size) {
      const std::size_t m = std::min(options.batch_size, n - start);
      batch.resize(static_cast<Eigen::Index>(m), x.cols());
      batch_y.resize(m);
      for (std::size_t r = 0; r < m; ++r) {
        batch.row(static_cast<Eigen::Index>(r)) =
            x.row(static_cast<Eigen::Index>(order[start + r]));
        batch_y[r] = y[order[start + r]];
      }
      const MlpParameters g = Backward(p, batch, batch_y);
      v.w1 = options.momentum * v.w1 - options.step * g.w1;
      v.b1 = options.momentum * v.b1 - options.step * g.b1;
      v.w2 = options.momentum * v.w2 - options.step * g.w2;
      v.b2 = options.momentum * v.b2 - options.step * g.b2;
      p.w1 += v.w1;
      p.b1 += v.b1;
      p.w2 += v.w2;
      p.b2 += v.b2;
    }
  }
  return model;
}

}  // namespace synthbench::utility
