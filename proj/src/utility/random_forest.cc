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

#include "synthbench/utility/random_forest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "synthbench/random.h"

namespace synthbench::utility {
namespace {

struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  double score = -1.0;  // sum over children of (sum_k c_k^2) / n_child
};

class TreeBuilder {
 public:
  TreeBuilder(const data::RowMatrix& x, std::span<const int> y,
              std::size_t n_classes, Rng& rng)
      : x_(x), y_(y), k_(n_classes), rng_(rng) {
    const auto d = static_cast<std::size_t>(x.cols());
    features_.resize(d);
    std::iota(features_.begin(), features_.end(), 0);
    per_split_ = static_cast<std::size_t>(
        std::ceil(std::sqrt(static_cast<double>(d))));
    per_split_ = std::clamp<std::size_t>(per_split_, 1, std::max<std::size_t>(d, 1));
  }

  RandomForest::Tree Build(std::vector<std::size_t> samples) {
    samples_ = std::move(samples);
    tree_ = {};
    struct Pending {
      std::size_t begin, end;
      int node;
    };
    std::vector<Pending> stack;
    tree_.nodes.emplace_back();
    stack.push_back({0, samples_.size(), 0});
    while (!stack.empty()) {
      const Pending p = stack.back();
      stack.pop_back();
      const SplitChoice split = FindSplit(p.begin, p.end);
      if (split.feature < 0) {
        MakeLeaf(p.node, p.begin, p.end);
        continue;
      }
      const auto f = static_cast<Eigen::Index>(split.feature);
      auto mid = std::partition(
          samples_.begin() + static_cast<long>(p.begin),
          samples_.begin() + static_cast<long>(p.end), [&](std::size_t s) {
            return x_(static_cast<Eigen::Index>(s), f) <= split.threshold;
          });
      const auto m = static_cast<std::size_t>(mid - samples_.begin());
      const int left = static_cast<int>(tree_.nodes.size());
      tree_.nodes.emplace_back();
      tree_.nodes.emplace_back();
      RandomForest::Node& node = tree_.nodes[static_cast<std::size_t>(p.node)];
      node.feature = split.feature;
      node.threshold = split.threshold;
      node.left = left;
      node.right = left + 1;
      stack.push_back({m, p.end, left + 1});
      stack.push_back({p.begin, m, left});
    }
    return std::move(tree_);
  }

 private:
  std::vector<double> Counts(std::size_t begin, std::size_t end) const {
    std::vector<double> counts(k_);
    for (std::size_t i = begin; i < end; ++i) {
      counts[static_cast<std::size_t>(y_[samples_[i]])] += 1.0;
    }
    return counts;
  }

  void MakeLeaf(int node, std::size_t begin, std::size_t end) {
    std::vector<double> counts = Counts(begin, end);
    const double n = static_cast<double>(end - begin);
    tree_.nodes[static_cast<std::size_t>(node)].leaf =
        tree_.leaf_proba.size() / k_;
    for (double c : counts) tree_.leaf_proba.push_back(c / n);
  }

  SplitChoice FindSplit(std::size_t begin, std::size_t end) {
    SplitChoice best;
    if (end - begin < 2) return best;
    const std::vector<double> counts = Counts(begin, end);
    if (std::count(counts.begin(), counts.end(), 0.0) ==
        static_cast<long>(k_ - 1)) {
      return best;  // pure
    }
    const std::size_t d = features_.size();
    for (std::size_t j = 0; j < d; ++j) {
      std::swap(features_[j], features_[j + rng_.Index(d - j)]);
      EvaluateFeature(static_cast<int>(features_[j]), begin, end, counts, best);
      if (j + 1 >= per_split_ && best.feature >= 0) break;
    }
    return best;
  }

  void EvaluateFeature(int feature, std::size_t begin, std::size_t end,
                       const std::vector<double>& total, SplitChoice& best) {
    const auto f = static_cast<Eigen::Index>(feature);
    column_.clear();
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t s = samples_[i];
      column_.emplace_back(x_(static_cast<Eigen::Index>(s), f), y_[s]);
    }
    std::sort(column_.begin(), column_.end());
    if (column_.front().first == column_.back().first) return;
    left_.assign(k_, 0.0);
    double left_sq = 0.0;
    double right_sq = 0.0;
    for (double c : total) right_sq += c * c;
    std::vector<double> right = total;
    const double n = static_cast<double>(column_.size());
    for (std::size_t i = 0; i + 1 < column_.size(); ++i) {
      const auto c = static_cast<std::size_t>(column_[i].second);
      left_sq += 2.0 * left_[c] + 1.0;
      left_[c] += 1.0;
      right_sq -= 2.0 * right[c] - 1.0;
      right[c] -= 1.0;
      const double v = column_[i].first;
      const double next = column_[i + 1].first;
      if (v == next) continue;
      const double nl = static_cast<double>(i + 1);
      const double score = left_sq / nl + right_sq / (n - nl);
      if (score > best.score) {
        best.score = score;
        best.feature = feature;
        const double midpoint = 0.5 * (v + next);
        best.threshold = midpoint < next ? midpoint : v;
      }
    }
  }

  const data::RowMatrix& x_;
  std::span<const int> y_;
  std::size_t k_;
  Rng& rng_;
  std::vector<std::size_t> features_;
  std::size_t per_split_ = 1;
  std::vector<std::size_t> samples_;
  RandomForest::Tree tree_;
  std::vector<std::pair<double, int>> column_;
  std::vector<double> left_;
};

}  // namespace

RandomForest RandomForest::Fit(const data::RowMatrix& x,
                               std::span<const int> y, std::size_t n_classes,
                               std::uint64_t seed, const Options& options) {
  RandomForest forest;
  forest.n_classes_ = n_classes;
  Rng rng(seed);
  TreeBuilder builder(x, y, n_classes, rng);
  const std::size_t n = static_cast<std::size_t>(x.rows());
  for (int t = 0; t < options.n_trees; ++t) {
    std::vector<std::size_t> bootstrap(n);
    for (auto& s : bootstrap) s = rng.Index(n);
    forest.trees_.push_back(builder.Build(std::move(bootstrap)));
  }
  return forest;
}

data::RowMatrix RandomForest::PredictProba(const data::RowMatrix& x) const {
  const auto k = static_cast<Eigen::Index>(n_classes_);
  data::RowMatrix out = data::RowMatrix::Zero(x.rows(), k);
  for (const Tree& tree : trees_) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const Node* node = &tree.nodes[0];
      while (node->feature >= 0) {
        node = &tree.nodes[static_cast<std::size_t>(
            x(i, node->feature) <= node->threshold ? node->left : node->right)];
      }
      const double* p = &tree.leaf_proba[node->leaf * n_classes_];
      for (Eigen::Index c = 0; c < k; ++c) out(i, c) += p[c];
    }
  }
  out /= static_cast<double>(trees_.size());
  return out;
}

}  // namespace synthbench::utility
