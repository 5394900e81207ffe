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

#include "synthbench/privacy/mia.h"

#include <algorithm>
#include <cmath>

#include "synthbench/data/encoding.h"
#include "synthbench/error.h"
#include "synthbench/random.h"

namespace synthbench::privacy {
namespace {

// Per row: category index (-1 if unknown) or scaled value, per column.
struct Coded {
  std::vector<int> codes;       // rows x columns, categorical columns only used
  std::vector<double> scaled;   // rows x columns, continuous columns only used
};

Coded CodeTable(const data::Table& t, const data::Encoder& enc) {
  const std::size_t c = t.num_columns();
  Coded out;
  out.codes.assign(t.num_rows() * c, -1);
  out.scaled.assign(t.num_rows() * c, 0.0);
  for (std::size_t col = 0; col < c; ++col) {
    const data::ColumnSpec& spec = enc.schema().columns[col];
    for (std::size_t r = 0; r < t.num_rows(); ++r) {
      const data::Cell& cell = t.rows()[r][col];
      if (data::IsMissing(cell)) {
        throw Error(ErrorCode::kSchemaMismatch, "missing cell in attack table");
      }
      if (spec.is_categorical()) {
        auto idx = spec.CategoryIndex(std::get<std::string>(cell));
        out.codes[r * c + col] = idx ? static_cast<int>(*idx) : -1;
      } else {
        out.scaled[r * c + col] = enc.Scale(col, std::get<double>(cell));
      }
    }
  }
  return out;
}

}  // namespace

void MiaConfig::Validate() const {
  if (thresholds.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no attack thresholds");
  }
  for (double t : thresholds) {
    if (!(t > 0.0 && t < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "attack thresholds must lie in (0, 1)");
    }
  }
  if (!(attacker_member_fraction > 0.0 && attacker_member_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "attacker member fraction must lie in (0, 1)");
  }
  if (!(continuous_match_tolerance >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "match tolerance must be non-negative");
  }
}

int MiaCategory(double value) {
  if (value < 0.5) return 3;
  if (value <= 0.8) return 2;
  return 1;
}

int MiaScore(std::span<const ThresholdResult> results) {
  if (results.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no attack results to score");
  }
  int score = 3;
  for (const ThresholdResult& r : results) {
    const int p = r.precision ? MiaCategory(*r.precision) : 3;
    score = std::min({score, p, MiaCategory(r.accuracy)});
  }
  return score;
}

std::vector<double> MinMismatchDistances(const data::Table& attacker,
                                         const data::Table& synthetic,
                                         const data::Table& scale_source,
                                         double tolerance) {
  const data::Encoder enc = data::Encoder::Fit(scale_source);
  const Coded a = CodeTable(attacker, enc);
  const Coded s = CodeTable(synthetic, enc);
  const std::size_t c = attacker.num_columns();
  std::vector<bool> categorical(c);
  for (std::size_t col = 0; col < c; ++col) {
    categorical[col] = enc.schema().columns[col].is_categorical();
  }
  std::vector<double> out;
  out.reserve(attacker.num_rows());
  for (std::size_t i = 0; i < attacker.num_rows(); ++i) {
    std::size_t best = c;
    for (std::size_t j = 0; j < synthetic.num_rows() && best > 0; ++j) {
      std::size_t mismatches = 0;
      for (std::size_t col = 0; col < c && mismatches < best; ++col) {
        if (categorical[col]) {
          mismatches += a.codes[i * c + col] != s.codes[j * c + col];
        } else {
          mismatches += std::abs(a.scaled[i * c + col] - s.scaled[j * c + col]) >
                        tolerance;
        }
      }
      best = std::min(best, mismatches);
    }
    out.push_back(static_cast<double>(best) / static_cast<double>(c));
  }
  return out;
}

MiaResult MiaAttack(const data::Table& real_train,
                    const data::Table& real_holdout,
                    const data::Table& synthetic, const MiaConfig& config) {
  config.Validate();
  if (real_holdout.num_rows() == 0) {
    throw Error(ErrorCode::kEmptyHoldout, "no holdout rows for the attacker");
  }
  if (synthetic.num_rows() == 0) {
    throw Error(ErrorCode::kEmptySynthetic, "synthetic table is empty");
  }
  if (!real_train.schema().CompatibleWith(real_holdout.schema()) ||
      !real_train.schema().CompatibleWith(synthetic.schema())) {
    throw Error(ErrorCode::kSchemaMismatch, "attack tables differ in schema");
  }
  const auto m = std::min(
      real_holdout.num_rows(),
      static_cast<std::size_t>(std::floor(
          config.attacker_member_fraction *
          static_cast<double>(real_train.num_rows()))));
  if (m == 0) {
    throw Error(ErrorCode::kTooFewRows, "too few training rows for an attack");
  }
  Rng rng(config.seed);
  const std::vector<std::size_t> member_idx =
      rng.Permutation(real_train.num_rows());
  const std::vector<std::size_t> other_idx =
      rng.Permutation(real_holdout.num_rows());
  std::vector<data::Record> rows;
  rows.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) rows.push_back(real_train.rows()[member_idx[i]]);
  for (std::size_t i = 0; i < m; ++i) rows.push_back(real_holdout.rows()[other_idx[i]]);
  const data::Table attacker(real_train.schema(), std::move(rows));
  const std::vector<double> dist = MinMismatchDistances(
      attacker, synthetic, real_train, config.continuous_match_tolerance);

  MiaResult result;
  result.members = m;
  result.non_members = m;
  for (double t : config.thresholds) {
    double tp = 0, fp = 0, tn = 0, fn = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
      const bool member = i < m;
      const bool predicted = dist[i] <= t;
      tp += member && predicted;
      fp += !member && predicted;
      tn += !member && !predicted;
      fn += member && !predicted;
    }
    ThresholdResult r;
    r.threshold = t;
    if (tp + fp > 0) r.precision = tp / (tp + fp);
    r.accuracy = (tp + tn) / static_cast<double>(dist.size());
    r.recall = tp / (tp + fn);
    result.per_threshold.push_back(r);
  }
  result.score = MiaScore(result.per_threshold);
  return result;
}

}  // namespace synthbench::privacy
