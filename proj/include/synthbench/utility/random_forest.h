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

#ifndef SYNTHBENCH_UTILITY_RANDOM_FOREST_H_
#define SYNTHBENCH_UTILITY_RANDOM_FOREST_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "synthbench/data/encoding.h"

namespace synthbench::utility {

// Bagged CART trees with Gini splits on ceil(sqrt(d)) sampled features, grown
// until a node is pure or holds fewer than two samples. If none of the sampled
// features can split a node the remaining features are tried in random order.
class RandomForest {
 public:
  struct Options {
    int n_trees = 100;
  };

  static RandomForest Fit(const data::RowMatrix& x, std::span<const int> y,
                          std::size_t n_classes, std::uint64_t seed,
                          const Options& options);
  static RandomForest Fit(const data::RowMatrix& x, std::span<const int> y,
                          std::size_t n_classes, std::uint64_t seed) {
    return Fit(x, y, n_classes, seed, Options{});
  }

  // Mean of the leaf class frequencies over trees.
  data::RowMatrix PredictProba(const data::RowMatrix& x) const;

  std::size_t num_trees() const { return trees_.size(); }

  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::size_t leaf = 0;  // offset into the tree's leaf distributions
  };
  struct Tree {
    std::vector<Node> nodes;
    std::vector<double> leaf_proba;  // n_leaves x n_classes
  };

 private:
  std::size_t n_classes_ = 0;
  std::vector<Tree> trees_;
};

}  // namespace synthbench::utility

#endif  // SYNTHBENCH_UTILITY_RANDOM_FOREST_H_
