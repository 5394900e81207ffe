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

#include "synthbench/utility/classifier.h"

#include <set>

#include "synthbench/error.h"

namespace synthbench::utility {

std::string_view ClassifierKindName(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kLogisticRegression:
      return "logistic_regression";
    case ClassifierKind::kRandomForest:
      return "random_forest";
    case ClassifierKind::kMultiLayerPerceptron:
      return "mlp";
  }
  return "unknown";
}

ClassifierKind ParseClassifierKind(std::string_view name) {
  for (ClassifierKind kind : kAllClassifierKinds) {
    if (ClassifierKindName(kind) == name) return kind;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown classifier '" + std::string(name) + "'");
}

data::RowMatrix ClassifierModel::PredictProba(
    const data::EncodedMatrix& x) const {
  if (x.feature_map != feature_map) {
    throw Error(ErrorCode::kFeatureMismatch,
                "prediction features differ from training features");
  }
  return std::visit([&](const auto& m) { return m.PredictProba(x.values); },
                    fitted);
}

ClassifierModel TrainClassifier(ClassifierKind kind,
                                const data::EncodedMatrix& x,
                                std::span<const int> y,
                                const std::vector<std::string>& class_labels,
                                std::uint64_t seed) {
  if (x.rows() == 0) {
    throw Error(ErrorCode::kEmptyTrainingSet, "no training rows");
  }
  if (x.rows() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "label count does not match training rows");
  }
  std::set<int> distinct;
  for (int label : y) {
    if (label < 0 || static_cast<std::size_t>(label) >= class_labels.size()) {
      throw Error(ErrorCode::kInvalidArgument, "label outside class list");
    }
    distinct.insert(label);
  }
  if (distinct.size() < 2) {
    throw Error(ErrorCode::kSingleClass, "training labels hold one class");
  }
  ClassifierModel model{kind, class_labels, x.feature_map, LogisticRegression{}};
  const std::size_t k = class_labels.size();
  switch (kind) {
    case ClassifierKind::kLogisticRegression:
      model.fitted = LogisticRegression::Fit(x.values, y, k);
      break;
    case ClassifierKind::kRandomForest:
      model.fitted = RandomForest::Fit(x.values, y, k, seed);
      break;
    case ClassifierKind::kMultiLayerPerceptron:
      model.fitted = Mlp::Fit(x.values, y, k, seed);
      break;
  }
  return model;
}

}  // namespace synthbench::utility
