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

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.h"
#include "synthbench/error.h"
#include "synthbench/random.h"
#include "test_util.h"

namespace synthbench::resemblance {
namespace {

using data::Record;
using data::Schema;
using data::Table;
using ::synthbench::testing::Categorical;
using ::synthbench::testing::Continuous;
using ::synthbench::testing::MakeTable;

std::vector<double> RandomSimplex(Rng& rng, std::size_t k, bool allow_zero) {
  std::vector<double> p(k);
  double total = 0.0;
  for (double& x : p) {
    x = allow_zero && rng.Uniform() < 0.3 ? 0.0 : rng.Uniform();
    total += x;
  }
  if (total == 0.0) {
    p[0] = 1.0;
    total = 1.0;
  }
  for (double& x : p) x /= total;
  return p;
}

TEST(JsdTest, IdenticalIsZero) {
  Histogram h = {{"a", 3}, {"b", 5}, {"c", 1}};
  EXPECT_EQ(JsdCategorical(h, h), 0.0);
}

TEST(JsdTest, DisjointSupportsIsOne) {
  EXPECT_DOUBLE_EQ(JsdCategorical({{"a", 1}}, {{"b", 1}}), 1.0);
}

TEST(JsdTest, HandValue) {
  // m = {0.75, 0.25}: 0.5 * KL(p||m) + 0.5 * KL(q||m) = 0.311278...
  EXPECT_NEAR(JsdCategorical({{"a", 0.5}, {"b", 0.5}}, {{"a", 1.0}}), 0.31128,
              1e-5);
  // Counts normalize to the same distributions.
  EXPECT_NEAR(JsdCategorical({{"a", 10}, {"b", 10}}, {{"a", 3}}), 0.31128, 1e-5);
}

TEST(JsdTest, EmptyColumn) {
  EXPECT_THROW(JsdCategorical({}, {{"a", 1}}), Error);
}

TEST(JsdTest, MatchesEntropyOracleSymmetricAndBounded) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng.Index(8);
    auto p = RandomSimplex(rng, k, true);
    auto q = RandomSimplex(rng, k, true);
    const double jsd = JensenShannonDivergence(p, q);
    EXPECT_NEAR(jsd, oracles::Jsd(p, q), 1e-9);
    EXPECT_EQ(jsd, JensenShannonDivergence(q, p));
    EXPECT_GE(jsd, 0.0);
    EXPECT_LE(jsd, 1.0);
    EXPECT_EQ(JensenShannonDivergence(p, p), 0.0);
  }
}

TEST(WassersteinTest, HandValues) {
  const std::vector<double> a = {0.2, 0.4, 0.9};
  EXPECT_EQ(Wasserstein1d(a, a), 0.0);
  EXPECT_EQ(Wasserstein1d(std::vector<double>{0.0}, std::vector<double>{1.0}),
            1.0);
  EXPECT_EQ(Wasserstein1d(std::vector<double>{0.0, 1.0},
                          std::vector<double>{0.5, 0.5}),
            0.5);
  EXPECT_THROW(Wasserstein1d(std::vector<double>{}, a), Error);
}

TEST(WassersteinTest, EqualSizeSortedMeanAbsoluteDifference) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.Index(40);
    std::vector<double> a(n), b(n);
    for (auto& x : a) x = rng.Uniform();
    for (auto& x : b) x = rng.Uniform() * 0.8 + 0.1;
    std::vector<double> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double oracle = 0.0;
    for (std::size_t i = 0; i < n; ++i) oracle += std::abs(sa[i] - sb[i]);
    oracle /= static_cast<double>(n);
    EXPECT_NEAR(Wasserstein1d(a, b), oracle, 1e-12);
    EXPECT_NEAR(Wasserstein1d(a, b), Wasserstein1d(b, a), 1e-15);
  }
}

TEST(WassersteinTest, UnequalSizesMatchQuantileOracle) {
  Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(1 + rng.Index(30)), b(1 + rng.Index(30));
    // Coarse grid to exercise ties.
    for (auto& x : a) x = std::floor(rng.Uniform() * 8) / 8;
    for (auto& x : b) x = rng.Uniform();
    EXPECT_NEAR(Wasserstein1d(a, b), oracles::Wasserstein(a, b), 1e-12);
  }
}

TEST(TheilsUTest, SelfAndConstant) {
  const std::vector<int> x = {0, 0, 1, 2, 1, 0};
  EXPECT_DOUBLE_EQ(TheilsU(x, x), 1.0);
  const std::vector<int> constant(6, 0);
  EXPECT_DOUBLE_EQ(TheilsU(x, constant), 0.0);
  EXPECT_DOUBLE_EQ(TheilsU(constant, x), 1.0);
}

TEST(TheilsUTest, IndependentCoinsNearZero) {
  Rng rng(34);
  std::vector<int> x(10000), y(10000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.Uniform() < 0.5;
    y[i] = rng.Uniform() < 0.5;
  }
  EXPECT_LE(TheilsU(x, y), 0.01);
}

TEST(TheilsUTest, AsymmetricHandValue) {
  // x determined by y, y not determined by x.
  const std::vector<int> y = {0, 1, 2, 3};
  const std::vector<int> x = {0, 0, 1, 1};
  EXPECT_DOUBLE_EQ(TheilsU(x, y), 1.0);
  // H(y) = ln 4, H(y|x) = ln 2 -> U = 0.5.
  EXPECT_NEAR(TheilsU(y, x), 0.5, 1e-15);
}

TEST(CorrelationRatioTest, Extremes) {
  const std::vector<int> groups = {0, 0, 1, 1};
  EXPECT_DOUBLE_EQ(CorrelationRatio(groups, std::vector<double>{1, 1, 5, 5}),
                   1.0);
  EXPECT_DOUBLE_EQ(CorrelationRatio(groups, std::vector<double>{1, 5, 1, 5}),
                   0.0);
  EXPECT_DOUBLE_EQ(CorrelationRatio(groups, std::vector<double>{2, 2, 2, 2}),
                   0.0);
}

Table MixedTable(std::size_t n, std::uint64_t seed) {
  Schema schema;
  schema.columns = {Continuous("x"), Continuous("y"),
                    Categorical("g", {"a", "b", "c"}),
                    Categorical("h", {"p", "q"})};
  Rng rng(seed);
  std::vector<Record> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.Normal();
    const std::size_t g = rng.Index(3);
    rows.push_back({x, x * 0.5 + g + rng.Normal() * 0.3,
                    std::string(1, static_cast<char>('a' + g)),
                    std::string(rng.Uniform() < 0.3 + 0.2 * g ? "p" : "q")});
  }
  return MakeTable(schema, rows);
}

TEST(CorrelationMatrixTest, DiagonalAndSymmetryRules) {
  Table table = MixedTable(500, 35);
  Eigen::MatrixXd m = PairwiseCorrelationMatrix(table);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(m(i, i), 1.0);
  EXPECT_EQ(m(0, 1), m(1, 0));  // Pearson symmetric
  EXPECT_EQ(m(1, 2), m(2, 1));  // correlation ratio used both ways
  EXPECT_GT(m(1, 2), 0.5);
  EXPECT_NE(m(2, 3), m(3, 2));  // Theil's U is asymmetric
}

TEST(CorrelationMatrixTest, DuplicateColumnsCorrelatePerfectly) {
  Schema schema;
  schema.columns = {Continuous("x"), Continuous("x2"),
                    Categorical("g", {"a", "b", "c"}),
                    Categorical("g2", {"a", "b", "c"})};
  Rng rng(36);
  std::vector<Record> rows;
  for (int i = 0; i < 50; ++i) {
    const double x = rng.Normal();
    const std::string g(1, static_cast<char>('a' + rng.Index(3)));
    rows.push_back({x, x, g, g});
  }
  Eigen::MatrixXd m = PairwiseCorrelationMatrix(MakeTable(schema, rows));
  EXPECT_NEAR(m(0, 1), 1.0, 1e-12);
  EXPECT_NEAR(m(2, 3), 1.0, 1e-12);
}

TEST(CorrelationMatrixTest, ZeroVarianceColumnWarns) {
  Schema schema;
  schema.columns = {Continuous("x"), Continuous("flat")};
  Table table = MakeTable(schema, {{1.0, 2.0}, {2.0, 2.0}, {3.0, 2.0}});
  std::vector<std::string> warnings;
  Eigen::MatrixXd m = PairwiseCorrelationMatrix(table, &warnings);
  EXPECT_EQ(m(0, 1), 0.0);
  EXPECT_EQ(m(1, 1), 1.0);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("'flat'"), std::string::npos);
  EXPECT_THROW(PairwiseCorrelationMatrix(MakeTable(schema, {{1.0, 2.0}})),
               Error);
}

TEST(CorrelationDifferenceTest, HandValues) {
  Eigen::Matrix2d a;
  a << 1, 0.3, 0.3, 1;
  EXPECT_EQ(CorrelationDifference(a, a), 0.0);
  Eigen::Matrix2d b = a;
  b(0, 1) += 1.0;
  EXPECT_DOUBLE_EQ(CorrelationDifference(a, b), 1.0);
  Eigen::Matrix2d c;
  c << 0.5, -0.5, -0.5, 0.5;
  EXPECT_DOUBLE_EQ(CorrelationDifference(a, a + c), 1.0);
  EXPECT_THROW(CorrelationDifference(a, Eigen::Matrix3d::Identity()), Error);
}

TEST(CorrelationDifferenceTest, TriangleInequality) {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + static_cast<int>(rng.Index(5));
    Eigen::MatrixXd x(d, d), y(d, d), z(d, d);
    for (int i = 0; i < d * d; ++i) {
      x.data()[i] = rng.Normal();
      y.data()[i] = rng.Normal();
      z.data()[i] = rng.Normal();
    }
    EXPECT_LE(CorrelationDifference(x, z),
              CorrelationDifference(x, y) + CorrelationDifference(y, z) + 1e-12);
  }
}

TEST(EvaluateResemblanceTest, SelfComparisonIsZero) {
  Table table = MixedTable(300, 38);
  ResemblanceReport report = EvaluateResemblance(table, table);
  ASSERT_TRUE(report.avg_jsd && report.avg_wd);
  EXPECT_EQ(*report.avg_jsd, 0.0);
  EXPECT_EQ(*report.avg_wd, 0.0);
  EXPECT_EQ(report.corr_diff, 0.0);
  EXPECT_EQ(report.per_column_jsd.size(), 2u);
  EXPECT_EQ(report.per_column_wd.size(), 2u);
}

TEST(EvaluateResemblanceTest, AveragesArePerColumnMeans) {
  Table real = MixedTable(300, 39);
  Table synth = MixedTable(400, 40);
  ResemblanceReport report = EvaluateResemblance(real, synth);
  double jsd = 0.0;
  for (const auto& [name, v] : report.per_column_jsd) jsd += v;
  double wd = 0.0;
  for (const auto& [name, v] : report.per_column_wd) wd += v;
  EXPECT_DOUBLE_EQ(*report.avg_jsd, jsd / 2);
  EXPECT_DOUBLE_EQ(*report.avg_wd, wd / 2);
  EXPECT_GT(report.corr_diff, 0.0);
  EXPECT_LE(*report.avg_wd, 1.0);
}

TEST(EvaluateResemblanceTest, NoCategoricalColumnsMeansNoJsd) {
  Schema schema;
  schema.columns = {Continuous("x"), Continuous("y")};
  Table t = MakeTable(schema, {{1.0, 2.0}, {2.0, 1.0}, {3.0, 5.0}});
  ResemblanceReport report = EvaluateResemblance(t, t);
  EXPECT_FALSE(report.avg_jsd.has_value());
  EXPECT_TRUE(report.avg_wd.has_value());
}

}  // namespace
}  // namespace synthbench::resemblance
