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

#include "synthbench/resemblance/resemblance.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "synthbench/data/encoding.h"
#include "synthbench/error.h"

namespace synthbench::resemblance {
namespace {

double KlTerm(double p, double m) { return p > 0.0 ? p * std::log2(p / m) : 0.0; }

double Entropy(std::span<const double> counts, double total) {
  double h = 0.0;
  for (double c : counts) {
    if (c > 0.0) {
      const double p = c / total;
      h -= p * std::log(p);
    }
  }
  return h;
}

std::size_t CodeCount(std::span<const int> codes) {
  return codes.empty() ? 0 : static_cast<std::size_t>(
                                 *std::max_element(codes.begin(), codes.end())) +
                                 1;
}

double Pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa <= 0.0 || sbb <= 0.0) return 0.0;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

}  // namespace

Histogram ColumnHistogram(const data::Table& table, std::size_t col) {
  Histogram histogram;
  for (const data::Record& record : table.rows()) {
    if (const auto* label = std::get_if<std::string>(&record[col])) {
      histogram[*label] += 1.0;
    }
  }
  return histogram;
}

double JensenShannonDivergence(std::span<const double> p,
                               std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "JSD needs aligned probability vectors");
  }
  double divergence = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    divergence += 0.5 * KlTerm(p[i], m) + 0.5 * KlTerm(q[i], m);
  }
  return std::clamp(divergence, 0.0, 1.0);
}

double JsdCategorical(const Histogram& real, const Histogram& synthetic) {
  double real_total = 0.0;
  double synth_total = 0.0;
  for (const auto& [label, count] : real) real_total += count;
  for (const auto& [label, count] : synthetic) synth_total += count;
  if (real_total <= 0.0 || synth_total <= 0.0) {
    throw Error(ErrorCode::kEmptyColumn, "JSD of an empty column");
  }
  std::vector<double> p;
  std::vector<double> q;
  auto it_r = real.begin();
  auto it_s = synthetic.begin();
  // Merge the two sorted label sets.
  while (it_r != real.end() || it_s != synthetic.end()) {
    if (it_s == synthetic.end() ||
        (it_r != real.end() && it_r->first < it_s->first)) {
      p.push_back(it_r->second / real_total);
      q.push_back(0.0);
      ++it_r;
    } else if (it_r == real.end() || it_s->first < it_r->first) {
      p.push_back(0.0);
      q.push_back(it_s->second / synth_total);
      ++it_s;
    } else {
      p.push_back(it_r->second / real_total);
      q.push_back(it_s->second / synth_total);
      ++it_r;
      ++it_s;
    }
  }
  return JensenShannonDivergence(p, q);
}

double Wasserstein1d(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptyColumn, "Wasserstein distance of an empty sample");
  }
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double area = 0.0;
  double x = std::min(sa.front(), sb.front());
  while (i < sa.size() || j < sb.size()) {
    // Advance past every sample equal to the current breakpoint.
    while (i < sa.size() && sa[i] <= x) ++i;
    while (j < sb.size() && sb[j] <= x) ++j;
    if (i == sa.size() && j == sb.size()) break;
    const double next = std::min(i < sa.size() ? sa[i] : sb[j],
                                 j < sb.size() ? sb[j] : sa[i]);
    const double gap = std::abs(static_cast<double>(i) / na -
                                static_cast<double>(j) / nb);
    area += gap * (next - x);
    x = next;
  }
  return area;
}

double TheilsU(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch, "Theil's U needs paired samples");
  }
  const std::size_t kx = CodeCount(x);
  const std::size_t ky = CodeCount(y);
  const double n = static_cast<double>(x.size());
  std::vector<double> x_counts(kx, 0.0);
  std::vector<double> y_counts(ky, 0.0);
  std::vector<double> joint(kx * ky, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto xi = static_cast<std::size_t>(x[i]);
    const auto yi = static_cast<std::size_t>(y[i]);
    x_counts[xi] += 1.0;
    y_counts[yi] += 1.0;
    joint[yi * kx + xi] += 1.0;
  }
  const double h_x = Entropy(x_counts, n);
  if (h_x <= 0.0) return 1.0;
  double h_x_given_y = 0.0;
  for (std::size_t yi = 0; yi < ky; ++yi) {
    if (y_counts[yi] <= 0.0) continue;
    std::span<const double> row(joint.data() + yi * kx, kx);
    h_x_given_y += (y_counts[yi] / n) * Entropy(row, y_counts[yi]);
  }
  return std::clamp((h_x - h_x_given_y) / h_x, 0.0, 1.0);
}

double CorrelationRatio(std::span<const int> categories,
                        std::span<const double> values) {
  if (categories.size() != values.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "correlation ratio needs paired samples");
  }
  const std::size_t k = CodeCount(categories);
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  std::vector<double> group_sum(k, 0.0);
  std::vector<double> group_count(k, 0.0);
  double total_ss = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto g = static_cast<std::size_t>(categories[i]);
    group_sum[g] += values[i];
    group_count[g] += 1.0;
    total_ss += (values[i] - mean) * (values[i] - mean);
  }
  if (total_ss <= 0.0) return 0.0;
  double between_ss = 0.0;
  for (std::size_t g = 0; g < k; ++g) {
    if (group_count[g] <= 0.0) continue;
    const double diff = group_sum[g] / group_count[g] - mean;
    between_ss += group_count[g] * diff * diff;
  }
  return std::sqrt(std::clamp(between_ss / total_ss, 0.0, 1.0));
}

Eigen::MatrixXd PairwiseCorrelationMatrix(const data::Table& table,
                                          std::vector<std::string>* warnings) {
  if (table.num_rows() < 2) {
    throw Error(ErrorCode::kTooFewRows,
                "correlation matrix needs at least 2 rows");
  }
  const data::Schema& schema = table.schema();
  const std::size_t d = schema.size();
  std::vector<std::vector<int>> codes(d);
  std::vector<std::vector<double>> values(d);
  for (std::size_t c = 0; c < d; ++c) {
    if (schema.columns[c].is_categorical()) {
      codes[c] = data::CategoryCodes(table, c);
    } else {
      values[c] = data::ContinuousValues(table, c);
    }
  }
  std::vector<bool> degenerate(d, false);
  for (std::size_t c = 0; c < d; ++c) {
    if (schema.columns[c].is_categorical()) continue;
    const auto [lo, hi] = std::minmax_element(values[c].begin(), values[c].end());
    degenerate[c] = *lo == *hi;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d),
                                                static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      const bool cat_i = schema.columns[i].is_categorical();
      const bool cat_j = schema.columns[j].is_categorical();
      double entry;
      if (!cat_i && !cat_j) {
        entry = degenerate[i] || degenerate[j] ? 0.0 : Pearson(values[i], values[j]);
      } else if (cat_i && cat_j) {
        entry = TheilsU(codes[i], codes[j]);
      } else if (cat_i) {
        entry = CorrelationRatio(codes[i], values[j]);
      } else {
        entry = CorrelationRatio(codes[j], values[i]);
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry;
    }
  }
  if (warnings != nullptr) {
    for (std::size_t c = 0; c < d; ++c) {
      if (degenerate[c]) {
        warnings->push_back("column '" + schema.columns[c].name +
                            "' has zero variance; its Pearson entries are 0");
      }
    }
  }
  return m;
}

double CorrelationDifference(const Eigen::MatrixXd& real,
                             const Eigen::MatrixXd& synthetic) {
  if (real.rows() != synthetic.rows() || real.cols() != synthetic.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "correlation matrices differ in shape");
  }
  return (real - synthetic).norm();
}

ResemblanceReport EvaluateResemblance(const data::Table& real,
                                      const data::Table& synthetic) {
  if (!real.schema().CompatibleWith(synthetic.schema())) {
    throw Error(ErrorCode::kSchemaMismatch,
                "real and synthetic schemas differ");
  }
  if (real.num_rows() == 0 || synthetic.num_rows() == 0) {
    throw Error(ErrorCode::kEmptyColumn, "resemblance of an empty table");
  }
  ResemblanceReport report;
  const data::Encoder encoder = data::Encoder::Fit(real);
  const data::Schema& schema = real.schema();
  double jsd_sum = 0.0;
  double wd_sum = 0.0;
  for (std::size_t c = 0; c < schema.size(); ++c) {
    const data::ColumnSpec& column = schema.columns[c];
    if (column.is_categorical()) {
      const double jsd = JsdCategorical(ColumnHistogram(real, c),
                                        ColumnHistogram(synthetic, c));
      report.per_column_jsd[column.name] = jsd;
      jsd_sum += jsd;
    } else {
      std::vector<double> a = data::ContinuousValues(real, c);
      std::vector<double> b = data::ContinuousValues(synthetic, c);
      for (double& v : a) v = encoder.Scale(c, v);
      for (double& v : b) v = encoder.Scale(c, v);
      const double wd = Wasserstein1d(a, b);
      report.per_column_wd[column.name] = wd;
      wd_sum += wd;
    }
  }
  if (!report.per_column_jsd.empty()) {
    report.avg_jsd = jsd_sum / static_cast<double>(report.per_column_jsd.size());
  }
  if (!report.per_column_wd.empty()) {
    report.avg_wd = wd_sum / static_cast<double>(report.per_column_wd.size());
  }
  std::vector<std::string> real_notes;
  std::vector<std::string> synth_notes;
  const Eigen::MatrixXd real_corr = PairwiseCorrelationMatrix(real, &real_notes);
  const Eigen::MatrixXd synth_corr =
      PairwiseCorrelationMatrix(synthetic, &synth_notes);
  report.corr_diff = CorrelationDifference(real_corr, synth_corr);
  for (const std::string& note : real_notes) {
    report.warnings.push_back("real: " + note);
  }
  for (const std::string& note : synth_notes) {
    report.warnings.push_back("synthetic: " + note);
  }
  return report;
}

}  // namespace synthbench::resemblance
