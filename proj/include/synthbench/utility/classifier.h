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

#ifndef SYNTHBENCH_UTILITY_CLASSIFIER_H_
#define SYNTHBENCH_UTILITY_CLASSIFIER_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "synthbench/data/encoding.h"
#include "synthbench/utility/logistic_regression.h"
#include "synthbench/utility/mlp.h"
#include "synthbench/utility/random_forest.h"

namespace synthbench::utility {

enum class ClassifierKind { kLogisticRegression, kRandomForest, kMultiLayerPerceptron };

inline constexpr std::array<ClassifierKind, 3> kAllClassifierKinds = {
    ClassifierKind::kLogisticRegression, ClassifierKind::kRandomForest,
    ClassifierKind::kMultiLayerPerceptron};

// "logistic_regression", "random_forest", "mlp".
std::string_view ClassifierKindName(ClassifierKind kind);
ClassifierKind ParseClassifierKind(std::string_view name);

struct ClassifierModel {
  ClassifierKind kind = ClassifierKind::kLogisticRegression;
  std::vector<std::string> class_labels;
  std::vector<data::FeatureRole> feature_map;
  std::variant<LogisticRegression, RandomForest, Mlp> fitted;

  // Rows over class_labels. Throws kFeatureMismatch when x was encoded
  // differently from the training matrix.
  data::RowMatrix PredictProba(const data::EncodedMatrix& x) const;
};

// Throws kEmptyTrainingSet, kLengthMismatch, kSingleClass, or
// kInvalidArgument for labels outside class_labels.
ClassifierModel TrainClassifier(ClassifierKind kind,
                                const data::EncodedMatrix& x,
                                std::span<const int> y,
                                const std::vector<std::string>& class_labels,
                                std::uint64_t seed);

}  // namespace synthbench::utility

#endif  // SYNTHBENCH_UTILITY_CLASSIFIER_H_
