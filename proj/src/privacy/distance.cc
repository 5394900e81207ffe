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

#include "synthbench/privacy/distance.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "synthbench/error.h"

namespace synthbench::privacy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckSameSpace(const data::EncodedMatrix& a, const data::EncodedMatrix& b) {
  if (a.features() != b.features() || a.feature_map != b.feature_map) {
    throw Error(ErrorCode::kFeatureMismatch,
                "distance sets use different encodings");
  }
}

std::vector<Neighbors> NeighborsOf(const data::EncodedMatrix& query,
                                   const data::EncodedMatrix& reference,
                                   bool same_set, std::size_t min_reference) {
  if (query.rows() == 0 || reference.rows() == 0) {
    throw Error(ErrorCode::kEmptySet, "distance set is empty");
  }
  CheckSameSpace(query, reference);
  const std::size_t available = reference.rows() - (same_set ? 1 : 0);
  if (available < min_reference) {
    throw Error(ErrorCode::kTooFewReferences,
                "need " + std::to_string(min_reference) +
                    " reference rows, have " + std::to_string(available));
  }
  return TwoNearest(query.values, reference.values, same_set);
}

std::optional<double> RatioPercentile(const std::vector<Neighbors>& neighbors,
                                      double percentile) {
  std::vector<double> ratios;
  for (const Neighbors& n : neighbors) {
    if (n.second == 0.0) continue;  // 0/0
    ratios.push_back(n.nearest / n.second);
  }
  if (ratios.empty()) return std::nullopt;
  return Percentile(std::move(ratios), percentile);
}

}  // namespace

double Percentile(std::vector<double> values, double p) {
  if (values.empty()) throw Error(ErrorCode::kEmptySet, "percentile of nothing");
  const auto k = static_cast<std::size_t>(
      std::floor(p / 100.0 * static_cast<double>(values.size() - 1)));
  std::nth_element(values.begin(), values.begin() + static_cast<long>(k),
                   values.end());
  return values[k];
}

std::vector<Neighbors> TwoNearest(const data::RowMatrix& query,
                                  const data::RowMatrix& reference,
                                  bool same_set) {
  const Eigen::Index d = query.cols();
  std::vector<Neighbors> out(static_cast<std::size_t>(query.rows()));
  for (Eigen::Index i = 0; i < query.rows(); ++i) {
    const double* q = query.row(i).data();
    double best = kInf;
    double second = kInf;
    for (Eigen::Index j = 0; j < reference.rows(); ++j) {
      if (same_set && i == j) continue;
      const double* r = reference.row(j).data();
      double s = 0.0;
      Eigen::Index k = 0;
      // Stop once the partial sum cannot beat the second-best distance.
      for (; k < d && s <= second; ++k) {
        const double diff = q[k] - r[k];
        s += diff * diff;
      }
      if (k < d || s > second) continue;
      if (s < best) {
        second = best;
        best = s;
      } else {
        second = s;
      }
    }
    out[static_cast<std::size_t>(i)] = {std::sqrt(best), std::sqrt(second)};
  }
  return out;
}

double Dcr(const data::EncodedMatrix& query,
           const data::EncodedMatrix& reference, double percentile) {
  std::vector<double> mins;
  for (const Neighbors& n : NeighborsOf(query, reference, false, 1)) {
    mins.push_back(n.nearest);
  }
  return Percentile(std::move(mins), percentile);
}

double DcrWithin(const data::EncodedMatrix& set, double percentile) {
  std::vector<double> mins;
  for (const Neighbors& n : NeighborsOf(set, set, true, 1)) {
    mins.push_back(n.nearest);
  }
  return Percentile(std::move(mins), percentile);
}

std::optional<double> Nndr(const data::EncodedMatrix& query,
                           const data::EncodedMatrix& reference,
                           double percentile) {
  return RatioPercentile(NeighborsOf(query, reference, false, 2), percentile);
}

std::optional<double> NndrWithin(const data::EncodedMatrix& set,
                                 double percentile) {
  return RatioPercentile(NeighborsOf(set, set, true, 2), percentile);
}

bool ModelCollapseFlag(double dcr_within_real, double dcr_within_synth) {
  return dcr_within_real > 0.0 && dcr_within_synth < 0.5 * dcr_within_real;
}

DistanceReport EvaluateDistances(const data::EncodedMatrix& real,
                                 const data::EncodedMatrix& synthetic) {
  DistanceReport r;
  const auto cross = NeighborsOf(synthetic, real, false, 2);
  const auto within_real = NeighborsOf(real, real, true, 2);
  const auto within_synth = NeighborsOf(synthetic, synthetic, true, 2);
  auto dcr = [](const std::vector<Neighbors>& ns) {
    std::vector<double> mins;
    mins.reserve(ns.size());
    for (const Neighbors& n : ns) mins.push_back(n.nearest);
    return Percentile(std::move(mins), kDefaultPercentile);
  };
  r.dcr_real_synth = dcr(cross);
  r.dcr_within_real = dcr(within_real);
  r.dcr_within_synth = dcr(within_synth);
  r.nndr_real_synth = RatioPercentile(cross, kDefaultPercentile);
  r.nndr_within_real = RatioPercentile(within_real, kDefaultPercentile);
  r.nndr_within_synth = RatioPercentile(within_synth, kDefaultPercentile);
  r.model_collapse = ModelCollapseFlag(r.dcr_within_real, r.dcr_within_synth);
  return r;
}

}  // namespace synthbench::privacy
