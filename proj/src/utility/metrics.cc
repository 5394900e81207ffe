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

#include "synthbench/utility/metrics.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "synthbench/error.h"

namespace synthbench::utility {

std::vector<int> ArgmaxRows(const data::RowMatrix& probs) {
  std::vector<int> out(static_cast<std::size_t>(probs.rows()));
  for (Eigen::Index i = 0; i < probs.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < probs.cols(); ++k) {
      if (probs(i, k) > probs(i, best)) best = k;
    }
    out[static_cast<std::size_t>(i)] = static_cast<int>(best);
  }
  return out;
}

double F1Macro(std::span<const int> y_true, std::span<const int> y_pred,
               std::size_t n_classes) {
  std::vector<double> tp(n_classes), fp(n_classes), fn(n_classes);
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const auto t = static_cast<std::size_t>(y_true[i]);
    const auto p = static_cast<std::size_t>(y_pred[i]);
    if (t == p) {
      tp[t] += 1;
    } else {
      fp[p] += 1;
      fn[t] += 1;
    }
  }
  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t k = 0; k < n_classes; ++k) {
    const double denom = 2 * tp[k] + fp[k] + fn[k];
    if (denom == 0.0) continue;
    sum += 2 * tp[k] / denom;
    ++used;
  }
  return used == 0 ? 0.0 : sum / static_cast<double>(used);
}

double MacroRocAuc(std::span<const int> y_true, const data::RowMatrix& probs) {
  const std::size_t n = y_true.size();
  std::vector<std::size_t> order(n);
  std::vector<double> ranks(n);
  double sum = 0.0;
  std::size_t used = 0;
  for (Eigen::Index k = 0; k < probs.cols(); ++k) {
    double pos = 0.0;
    for (int y : y_true) pos += y == k;
    const double neg = static_cast<double>(n) - pos;
    if (pos == 0.0 || neg == 0.0) continue;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return probs(static_cast<Eigen::Index>(a), k) <
             probs(static_cast<Eigen::Index>(b), k);
    });
    // Average 1-based ranks over runs of tied scores.
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      const double s = probs(static_cast<Eigen::Index>(order[i]), k);
      while (j < n && probs(static_cast<Eigen::Index>(order[j]), k) == s) ++j;
      const double avg = 0.5 * static_cast<double>(i + 1 + j);
      for (std::size_t t = i; t < j; ++t) ranks[order[t]] = avg;
      i = j;
    }
    double pos_rank_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (y_true[i] == k) pos_rank_sum += ranks[i];
    }
    sum += (pos_rank_sum - pos * (pos + 1) / 2) / (pos * neg);
    ++used;
  }
  return used == 0 ? 0.5 : sum / static_cast<double>(used);
}

UtilityMetrics ClassificationMetrics(std::span<const int> y_true,
                                     const data::RowMatrix& probs) {
  if (y_true.size() != static_cast<std::size_t>(probs.rows())) {
    throw Error(ErrorCode::kLengthMismatch,
                "label count does not match probability rows");
  }
  if (y_true.empty()) {
    throw Error(ErrorCode::kEmptySet, "no rows to score");
  }
  const std::vector<int> pred = ArgmaxRows(probs);
  double correct = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) correct += pred[i] == y_true[i];
  UtilityMetrics m;
  m.accuracy = correct / static_cast<double>(y_true.size());
  m.f1_macro =
      F1Macro(y_true, pred, static_cast<std::size_t>(probs.cols()));
  m.roc_auc = MacroRocAuc(y_true, probs);
  return m;
}

}  // namespace synthbench::utility
