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

#include "synthbench/generators/gaussian_copula.h"

#include <algorithm>
#include <cmath>

#include "synthbench/error.h"
#include "synthbench/generators/gaussian.h"

namespace synthbench::generators {

double ContinuousEmpirical::ToUniform(double value) const {
  const double n = static_cast<double>(sorted_values.size());
  const auto lower =
      std::lower_bound(sorted_values.begin(), sorted_values.end(), value);
  const auto upper = std::upper_bound(lower, sorted_values.end(), value);
  const double below = static_cast<double>(lower - sorted_values.begin());
  const double through = static_cast<double>(upper - sorted_values.begin());
  if (through == below) {
    // Not a training value: position between neighbours.
    return std::clamp(below / n, 0.5 / n, 1.0 - 0.5 / n);
  }
  const double mean_rank = 0.5 * (below + 1.0 + through);
  return (mean_rank - 0.5) / n;
}

double ContinuousEmpirical::FromUniform(double u) const {
  const std::size_t n = sorted_values.size();
  const double position = u * static_cast<double>(n) - 0.5;
  if (position <= 0.0) return sorted_values.front();
  if (position >= static_cast<double>(n - 1)) return sorted_values.back();
  const auto k = static_cast<std::size_t>(std::floor(position));
  const double frac = position - static_cast<double>(k);
  const double lo = sorted_values[k];
  const double hi = sorted_values[k + 1];
  return frac == 0.0 ? lo : lo + frac * (hi - lo);
}

double CategoricalIntervals::ToUniform(const std::string& label) const {
  for (std::size_t k = 0; k < categories.size(); ++k) {
    if (categories[k] == label) {
      const double lo = k == 0 ? 0.0 : cumulative_bounds[k - 1];
      return 0.5 * (lo + cumulative_bounds[k]);
    }
  }
  throw Error(ErrorCode::kSchemaMismatch,
              "category '" + label + "' was not seen in training");
}

const std::string& CategoricalIntervals::FromUniform(double u) const {
  auto it = std::upper_bound(cumulative_bounds.begin(), cumulative_bounds.end(),
                             u);
  auto k = static_cast<std::size_t>(it - cumulative_bounds.begin());
  return categories[std::min(k, categories.size() - 1)];
}

CategoricalIntervals FitCategoricalIntervals(const data::ColumnSpec& column,
                                             const std::vector<int>& codes) {
  std::vector<std::size_t> counts(column.categories.size(), 0);
  for (int code : codes) ++counts[static_cast<std::size_t>(code)];
  CategoricalIntervals intervals;
  const double n = static_cast<double>(codes.size());
  double running = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const double frequency = static_cast<double>(counts[k]) / n;
    running += frequency;
    intervals.categories.push_back(column.categories[k]);
    intervals.frequencies.push_back(frequency);
    intervals.cumulative_bounds.push_back(running);
  }
  if (!intervals.cumulative_bounds.empty()) {
    intervals.cumulative_bounds.back() = 1.0;
  }
  return intervals;
}

namespace {

// Pearson correlation of the columns of `z`; zero-variance columns get zero
// off-diagonal entries. Diagonal is 1.
Eigen::MatrixXd ColumnCorrelation(const Eigen::MatrixXd& z) {
  const Eigen::Index d = z.cols();
  const Eigen::MatrixXd centered = z.rowwise() - z.colwise().mean();
  const Eigen::MatrixXd cross = centered.transpose() * centered;
  Eigen::MatrixXd corr = Eigen::MatrixXd::Identity(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const double denom = std::sqrt(cross(i, i) * cross(j, j));
      const double r = denom > 0.0 ? cross(i, j) / denom : 0.0;
      corr(i, j) = corr(j, i) = std::clamp(r, -1.0, 1.0);
    }
  }
  return corr;
}

}  // namespace

GcModel FitGaussianCopula(const data::Table& train) {
  const std::size_t n = train.num_rows();
  if (n < 2) {
    throw Error(ErrorCode::kTooFewRows,
                "Gaussian copula fit needs at least 2 rows");
  }
  GcModel model;
  model.schema = data::WithObservedRanges(train.schema(), train);
  const std::size_t d = model.schema.size();
  Eigen::MatrixXd scores(static_cast<Eigen::Index>(n),
                         static_cast<Eigen::Index>(d));
  for (std::size_t c = 0; c < d; ++c) {
    const data::ColumnSpec& column = model.schema.columns[c];
    const auto col = static_cast<Eigen::Index>(c);
    if (column.is_categorical()) {
      const std::vector<int> codes = data::CategoryCodes(train, c);
      CategoricalIntervals marginal = FitCategoricalIntervals(column, codes);
      for (std::size_t r = 0; r < n; ++r) {
        const std::string& label =
            column.categories[static_cast<std::size_t>(codes[r])];
        scores(static_cast<Eigen::Index>(r), col) =
            NormalQuantile(marginal.ToUniform(label));
      }
      model.marginals.emplace_back(std::move(marginal));
    } else {
      std::vector<double> values = data::ContinuousValues(train, c);
      ContinuousEmpirical marginal;
      marginal.sorted_values = values;
      std::sort(marginal.sorted_values.begin(), marginal.sorted_values.end());
      for (std::size_t r = 0; r < n; ++r) {
        scores(static_cast<Eigen::Index>(r), col) =
            NormalQuantile(marginal.ToUniform(values[r]));
      }
      model.marginals.emplace_back(std::move(marginal));
    }
  }
  model.copula_correlation = RepairCorrelation(ColumnCorrelation(scores));
  return model;
}

data::Table SampleGaussianCopula(const GcModel& model, std::size_t n,
                                 std::uint64_t seed) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "sample size must be positive");
  }
  const std::size_t d = model.schema.size();
  const MultivariateNormalSampler sampler(
      Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d)),
      model.copula_correlation);
  Rng rng(seed);
  std::vector<data::Record> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::VectorXd z = sampler.Draw(rng);
    data::Record record;
    record.reserve(d);
    for (std::size_t c = 0; c < d; ++c) {
      const double u = NormalCdf(z[static_cast<Eigen::Index>(c)]);
      std::visit(
          [&](const auto& marginal) {
            record.emplace_back(marginal.FromUniform(u));
          },
          model.marginals[c]);
    }
    rows.push_back(std::move(record));
  }
  return data::Table(model.schema, std::move(rows));
}

}  // namespace synthbench::generators
