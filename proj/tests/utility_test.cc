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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "gtest/gtest.h"
#include "oracles.h"
#include "synthbench/data/encoding.h"
#include "synthbench/data/preprocess.h"
#include "synthbench/error.h"
#include "synthbench/random.h"
#include "synthbench/utility/classifier.h"
#include "synthbench/utility/logistic_regression.h"
#include "synthbench/utility/metrics.h"
#include "synthbench/utility/mlp.h"
#include "synthbench/utility/target.h"
#include "synthbench/utility/utility.h"
#include "test_util.h"

namespace synthbench::utility {
namespace {

using data::Record;
using data::RowMatrix;
using data::Schema;
using data::Table;
using ::synthbench::testing::Categorical;
using ::synthbench::testing::Continuous;
using ::synthbench::testing::MakeTable;
using ::synthbench::testing::TwoBlobs;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

Table ContinuousTarget(const std::vector<double>& values) {
  Schema schema;
  schema.columns = {Continuous("x"), Continuous("y")};
  std::vector<Record> rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    rows.push_back({static_cast<double>(i), values[i]});
  }
  return MakeTable(schema, rows);
}

TEST(TargetTest, CategoricalLabelsUnchanged) {
  Schema schema;
  schema.columns = {Continuous("x"), Categorical("t", {"H", "L", "M"})};
  Table t = MakeTable(schema, {{1.0, std::string("L")},
                               {2.0, std::string("M")},
                               {3.0, std::string("H")}});
  TargetEncoder enc = TargetEncoder::Fit(t, "t");
  EXPECT_FALSE(enc.binned());
  EXPECT_EQ(enc.class_labels(), (std::vector<std::string>{"H", "L", "M"}));
  EXPECT_EQ(enc.Labels(t), (std::vector<int>{1, 2, 0}));
  Table features = enc.Features(t);
  ASSERT_EQ(features.num_columns(), 1u);
  EXPECT_EQ(features.schema().columns[0].name, "x");
}

TEST(TargetTest, MedianSplit) {
  Table t = ContinuousTarget({10, 20, 30, 40});
  TargetEncoder enc = TargetEncoder::Fit(t, "y");
  ASSERT_TRUE(enc.binned());
  EXPECT_EQ(enc.edges(), std::vector<double>{25.0});
  EXPECT_EQ(enc.class_labels(), (std::vector<std::string>{"low", "high"}));
  EXPECT_EQ(enc.Labels(t), (std::vector<int>{0, 0, 1, 1}));
  // Edges come from the fit table only; the median itself goes low.
  EXPECT_EQ(enc.Labels(ContinuousTarget({25, 26, -1})),
            (std::vector<int>{0, 1, 0}));
}

TEST(TargetTest, QuantileEdges) {
  std::vector<double> v(9);
  std::iota(v.begin(), v.end(), 1.0);
  TargetEncoder enc =
      TargetEncoder::Fit(ContinuousTarget(v), "y", std::vector<double>{0.25, 0.75});
  EXPECT_EQ(enc.edges(), (std::vector<double>{3.0, 7.0}));
  EXPECT_EQ(enc.num_classes(), 3u);
  EXPECT_EQ(CodeOf([&] {
              TargetEncoder::Fit(ContinuousTarget(v), "y",
                                 std::vector<double>{1.5});
            }),
            ErrorCode::kInvalidArgument);
}

TEST(TargetTest, ConstantTargetIsSingleClass) {
  EXPECT_EQ(CodeOf([] { TargetEncoder::Fit(ContinuousTarget({5, 5, 5}), "y"); }),
            ErrorCode::kSingleClass);
  EXPECT_EQ(CodeOf([] { TargetEncoder::Fit(ContinuousTarget({5, 5}), "nope"); }),
            ErrorCode::kSchemaMismatch);
}

RowMatrix Probs(std::initializer_list<std::initializer_list<double>> rows) {
  RowMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

TEST(MetricsTest, PerfectPrediction) {
  const std::vector<int> y = {0, 1, 2, 1};
  UtilityMetrics m = ClassificationMetrics(
      y, Probs({{0.8, 0.1, 0.1}, {0.1, 0.8, 0.1}, {0.2, 0.2, 0.6}, {0, 1, 0}}));
  EXPECT_EQ(m, (UtilityMetrics{1.0, 1.0, 1.0}));
}

TEST(MetricsTest, BinaryAccuracyTwoThirds) {
  const std::vector<int> y = {1, 0, 1};
  UtilityMetrics m =
      ClassificationMetrics(y, Probs({{0.2, 0.8}, {0.9, 0.1}, {0.6, 0.4}}));
  EXPECT_DOUBLE_EQ(m.accuracy, 2.0 / 3.0);
  // F1: class 0 has tp 1, fn 0, fp 1 -> 2/3; class 1 tp 1, fn 1 -> 2/3.
  EXPECT_DOUBLE_EQ(m.f1_macro, 2.0 / 3.0);
}

TEST(MetricsTest, DiscordantPairGivesZeroAuc) {
  const std::vector<int> y = {1, 0};
  EXPECT_EQ(MacroRocAuc(y, Probs({{0.7, 0.3}, {0.4, 0.6}})), 0.0);
  EXPECT_EQ(MacroRocAuc(y, Probs({{0.5, 0.5}, {0.5, 0.5}})), 0.5);
}

TEST(MetricsTest, LengthMismatch) {
  const std::vector<int> y = {1, 0, 1};
  EXPECT_EQ(CodeOf([&] { ClassificationMetrics(y, Probs({{0.5, 0.5}})); }),
            ErrorCode::kLengthMismatch);
}

TEST(MetricsTest, UnusedClassDoesNotLowerF1) {
  const std::vector<int> y = {0, 1};
  UtilityMetrics m = ClassificationMetrics(y, Probs({{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(m.f1_macro, 1.0);
  EXPECT_EQ(m.roc_auc, 1.0);
}

RowMatrix RandomSimplexRows(Rng& rng, std::size_t n, std::size_t k,
                            bool coarse) {
  RowMatrix p(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      const double u = rng.Uniform() + 0.01;
      p(i, j) = coarse ? std::floor(u * 4) + 1 : u;
    }
    p.row(i) /= p.row(i).sum();
  }
  return p;
}

TEST(MetricsTest, AucMatchesPairCountOracleAndRangesHold) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.Index(40);
    const std::size_t k = 2 + rng.Index(3);
    std::vector<int> y(n);
    for (int& v : y) v = static_cast<int>(rng.Index(k));
    const RowMatrix p = RandomSimplexRows(rng, n, k, trial % 2 == 0);
    std::vector<std::vector<double>> rows(n, std::vector<double>(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j)
        rows[i][j] = p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    EXPECT_NEAR(MacroRocAuc(y, p), oracles::MacroAuc(y, rows, int(k)), 1e-12);
    UtilityMetrics m = ClassificationMetrics(y, p);
    for (double v : {m.accuracy, m.f1_macro, m.roc_auc}) {
      EXPECT_TRUE(std::isfinite(v));
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

RowMatrix RandomMatrix(Rng& rng, Eigen::Index r, Eigen::Index c) {
  RowMatrix m(r, c);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.Normal();
  return m;
}

TEST(LogisticRegressionTest, GradientMatchesFiniteDifferences) {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 3, k = 3;
    const RowMatrix x = RandomMatrix(rng, 5, d);
    std::vector<int> y(5);
    for (int& v : y) v = static_cast<int>(rng.Index(k));
    const Eigen::MatrixXd w = RandomMatrix(rng, d + 1, k);
    const double l2 = 1e-3;
    const Eigen::MatrixXd g = LogisticGradient(w, x, y, l2);
    auto loss = [&](const std::vector<double>& flat) {
      Eigen::MatrixXd ww = Eigen::Map<const Eigen::MatrixXd>(flat.data(), d + 1, k);
      return LogisticLoss(ww, x, y, l2);
    };
    std::vector<double> flat(w.data(), w.data() + w.size());
    const auto numeric = oracles::CentralDifference(loss, flat, 1e-6);
    std::vector<double> analytic(g.data(), g.data() + g.size());
    EXPECT_LE(oracles::RelativeError(analytic, numeric), 1e-5);
  }
}

TEST(MlpTest, GradientMatchesFiniteDifferences) {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 4, h = 6, k = 3;
    const RowMatrix x = RandomMatrix(rng, 5, d);
    std::vector<int> y(5);
    for (int& v : y) v = static_cast<int>(rng.Index(k));
    MlpParameters p = Mlp::Initialize(d, h, k, rng.NextU64());
    for (Eigen::Index j = 0; j < p.b1.size(); ++j) p.b1(j) = 0.1 * rng.Normal();
    const std::vector<double> flat = p.Flatten();
    auto loss = [&](const std::vector<double>& f) {
      return MlpLoss(MlpParameters::Unflatten(f, d, h, k), x, y);
    };
    const auto numeric = oracles::CentralDifference(loss, flat, 1e-6);
    const auto analytic = MlpGradient(p, x, y).Flatten();
    EXPECT_LE(oracles::RelativeError(analytic, numeric), 1e-4);
  }
}

TEST(MlpTest, FlattenRoundTrip) {
  MlpParameters p = Mlp::Initialize(3, 5, 2, 7);
  const std::vector<double> flat = p.Flatten();
  EXPECT_EQ(flat.size(), 3u * 5 + 5 + 5 * 2 + 2);
  EXPECT_EQ(MlpParameters::Unflatten(flat, 3, 5, 2).Flatten(), flat);
}

struct Prepared {
  data::EncodedMatrix x;
  std::vector<int> y;
  std::vector<std::string> labels;
};

Prepared PrepareBlobs(std::size_t n, std::uint64_t seed) {
  Table blobs = TwoBlobs(n, seed);
  TargetEncoder enc = TargetEncoder::Fit(blobs, "label");
  PreparedTarget pt = PrepareTarget(enc, blobs);
  return {data::Encode(pt.features, pt.features), pt.labels, enc.class_labels()};
}

class ClassifierKindTest : public ::testing::TestWithParam<ClassifierKind> {};

TEST_P(ClassifierKindTest, SeparableBlobsTrainAccuracy) {
  const Prepared p = PrepareBlobs(200, 44);
  ClassifierModel m = TrainClassifier(GetParam(), p.x, p.y, p.labels, 1);
  UtilityMetrics metrics = ClassificationMetrics(p.y, m.PredictProba(p.x));
  EXPECT_GE(metrics.accuracy, 0.99);
}

TEST_P(ClassifierKindTest, DeterministicAndOnSimplex) {
  const Prepared p = PrepareBlobs(120, 45);
  Rng rng(46);
  data::EncodedMatrix probe = p.x;
  probe.values = RandomMatrix(rng, 30, 2).cwiseAbs().cwiseMin(1.0);
  const RowMatrix a =
      TrainClassifier(GetParam(), p.x, p.y, p.labels, 9).PredictProba(probe);
  const RowMatrix b =
      TrainClassifier(GetParam(), p.x, p.y, p.labels, 9).PredictProba(probe);
  EXPECT_EQ(a, b);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    EXPECT_NEAR(a.row(i).sum(), 1.0, 1e-9);
    EXPECT_GE(a.row(i).minCoeff(), 0.0);
  }
}

TEST_P(ClassifierKindTest, ErrorCases) {
  const Prepared p = PrepareBlobs(20, 47);
  const std::vector<int> one_class(20, 0);
  EXPECT_EQ(CodeOf([&] {
              TrainClassifier(GetParam(), p.x, one_class, p.labels, 1);
            }),
            ErrorCode::kSingleClass);
  data::EncodedMatrix empty = p.x;
  empty.values.resize(0, 2);
  EXPECT_EQ(CodeOf([&] {
              TrainClassifier(GetParam(), empty, std::vector<int>{}, p.labels, 1);
            }),
            ErrorCode::kEmptyTrainingSet);
  EXPECT_EQ(CodeOf([&] {
              TrainClassifier(GetParam(), p.x, std::vector<int>{0, 1}, p.labels,
                              1);
            }),
            ErrorCode::kLengthMismatch);
}

INSTANTIATE_TEST_SUITE_P(
    AllKinds, ClassifierKindTest, ::testing::ValuesIn(kAllClassifierKinds),
    [](const auto& info) {
      std::string name(ClassifierKindName(info.param));
      name.erase(std::remove(name.begin(), name.end(), '_'), name.end());
      return name;
    });

TEST(ClassifierTest, MulticlassProbabilitiesCoverAllLabels) {
  // Training data holds classes 0 and 2 of 3; output still has 3 columns.
  const Prepared p = PrepareBlobs(60, 48);
  std::vector<int> y = p.y;
  for (int& v : y) v *= 2;
  for (ClassifierKind kind : kAllClassifierKinds) {
    ClassifierModel m = TrainClassifier(kind, p.x, y, {"a", "b", "c"}, 3);
    RowMatrix probs = m.PredictProba(p.x);
    EXPECT_EQ(probs.cols(), 3);
    EXPECT_NEAR(probs.row(0).sum(), 1.0, 1e-9);
  }
}

TEST(ClassifierTest, FeatureMismatchRejected) {
  const Prepared p = PrepareBlobs(40, 49);
  ClassifierModel m = TrainClassifier(ClassifierKind::kLogisticRegression, p.x,
                                      p.y, p.labels, 1);
  data::EncodedMatrix other = p.x;
  other.feature_map.pop_back();
  EXPECT_EQ(CodeOf([&] { m.PredictProba(other); }), ErrorCode::kFeatureMismatch);
}

TEST(TstrTrtrTest, IdenticalSyntheticGivesZeroDiff) {
  Table all = TwoBlobs(300, 50, 3.0);
  data::Split split = data::SplitTable(all, 0.7, 51);
  UtilityReport r = TstrTrtr(split.train, split.eval, split.train, "label", 52);
  ASSERT_EQ(r.classifiers.size(), 3u);
  for (const ClassifierResult& c : r.classifiers) {
    EXPECT_EQ(c.trtr, c.tstr);
    EXPECT_EQ(c.diff, (UtilityMetrics{0, 0, 0}));
  }
  EXPECT_EQ(r.average_diff, (UtilityMetrics{0, 0, 0}));
  EXPECT_FALSE(r.target_binned());
}

TEST(TstrTrtrTest, PermutedLabelsDestroySignal) {
  Table all = TwoBlobs(400, 53);
  data::Split split = data::SplitTable(all, 0.7, 54);
  std::vector<Record> rows = split.train.rows();
  std::vector<std::size_t> perm = Rng(55).Permutation(rows.size());
  std::vector<Record> shuffled = rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    shuffled[i][2] = rows[perm[i]][2];
  }
  Table synthetic(split.train.schema(), shuffled);
  UtilityReport r = TstrTrtr(split.train, split.eval, synthetic, "label", 56);
  for (const ClassifierResult& c : r.classifiers) {
    EXPECT_GE(c.trtr.accuracy, 0.99);
    EXPECT_LE(c.tstr.accuracy, 0.75) << ClassifierKindName(c.kind);
    EXPECT_GT(c.diff.accuracy, 0.25);
  }
  std::vector<double> d;
  for (const auto& c : r.classifiers) d.push_back(c.diff.accuracy);
  EXPECT_DOUBLE_EQ(r.average_diff.accuracy, (d[0] + d[1] + d[2]) / 3.0);
}

TEST(TstrTrtrTest, ContinuousTargetIsBinnedOnTrain) {
  Schema schema;
  schema.columns = {Continuous("x"), Continuous("y")};
  Rng rng(57);
  std::vector<Record> rows;
  for (int i = 0; i < 200; ++i) {
    const double x = rng.Normal();
    rows.push_back({x, 3 * x + 0.1 * rng.Normal()});
  }
  Table t = MakeTable(schema, rows);
  data::Split split = data::SplitTable(t, 0.7, 58);
  UtilityOptions options;
  options.kinds = {ClassifierKind::kLogisticRegression};
  UtilityReport r =
      TstrTrtr(split.train, split.eval, split.train, "y", 59, options);
  ASSERT_TRUE(r.target_binned());
  EXPECT_EQ(r.bin_edges.size(), 1u);
  EXPECT_EQ(r.bin_edges[0], Quantile(data::ContinuousValues(split.train, 1), 0.5));
  EXPECT_GT(r.classifiers[0].trtr.accuracy, 0.9);
}

}  // namespace
}  // namespace synthbench::utility
