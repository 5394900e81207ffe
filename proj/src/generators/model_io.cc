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

#include "synthbench/generators/model_io.h"

#include "synthbench/data/csv.h"
#include "synthbench/data/schema_io.h"
#include "synthbench/error.h"

namespace synthbench::generators {
namespace {

nlohmann::json MatrixToJson(const Eigen::MatrixXd& m) {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", flat}};
}

Eigen::MatrixXd MatrixFromJson(const nlohmann::json& json) {
  const auto rows = json.at("rows").get<Eigen::Index>();
  const auto cols = json.at("cols").get<Eigen::Index>();
  const auto flat = json.at("data").get<std::vector<double>>();
  if (static_cast<Eigen::Index>(flat.size()) != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix data length does not match rows * cols");
  }
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = flat[static_cast<std::size_t>(r * cols + c)];
    }
  }
  return m;
}

template <typename Fn>
auto Guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch,
                std::string("malformed model JSON: ") + e.what());
  }
}

}  // namespace

nlohmann::json GmModelToJson(const GmModel& model) {
  std::vector<double> mean(model.mean.data(),
                           model.mean.data() + model.mean.size());
  return {{"type", "gaussian_multivariate"},
          {"schema", data::SchemaToJson(model.schema)},
          {"mean", mean},
          {"covariance", MatrixToJson(model.covariance)}};
}

GmModel GmModelFromJson(const nlohmann::json& json) {
  return Guarded([&] {
    if (json.at("type").get<std::string>() != "gaussian_multivariate") {
      throw Error(ErrorCode::kSchemaMismatch, "not a Gaussian multivariate model");
    }
    GmModel model;
    model.schema = data::SchemaFromJson(json.at("schema"));
    const auto mean = json.at("mean").get<std::vector<double>>();
    model.mean = Eigen::Map<const Eigen::VectorXd>(
        mean.data(), static_cast<Eigen::Index>(mean.size()));
    model.covariance = MatrixFromJson(json.at("covariance"));
    return model;
  });
}

nlohmann::json GcModelToJson(const GcModel& model) {
  nlohmann::json marginals = nlohmann::json::array();
  for (const MarginalModel& marginal : model.marginals) {
    if (const auto* empirical = std::get_if<ContinuousEmpirical>(&marginal)) {
      marginals.push_back({{"kind", "empirical"},
                           {"sorted_values", empirical->sorted_values}});
    } else {
      const auto& intervals = std::get<CategoricalIntervals>(marginal);
      marginals.push_back({{"kind", "intervals"},
                           {"categories", intervals.categories},
                           {"frequencies", intervals.frequencies},
                           {"cumulative_bounds", intervals.cumulative_bounds}});
    }
  }
  return {{"type", "gaussian_copula"},
          {"schema", data::SchemaToJson(model.schema)},
          {"marginals", std::move(marginals)},
          {"copula_correlation", MatrixToJson(model.copula_correlation)}};
}

GcModel GcModelFromJson(const nlohmann::json& json) {
  return Guarded([&] {
    if (json.at("type").get<std::string>() != "gaussian_copula") {
      throw Error(ErrorCode::kSchemaMismatch, "not a Gaussian copula model");
    }
    GcModel model;
    model.schema = data::SchemaFromJson(json.at("schema"));
    for (const auto& entry : json.at("marginals")) {
      if (entry.at("kind").get<std::string>() == "empirical") {
        model.marginals.emplace_back(ContinuousEmpirical{
            entry.at("sorted_values").get<std::vector<double>>()});
      } else {
        model.marginals.emplace_back(CategoricalIntervals{
            entry.at("categories").get<std::vector<std::string>>(),
            entry.at("frequencies").get<std::vector<double>>(),
            entry.at("cumulative_bounds").get<std::vector<double>>()});
      }
    }
    model.copula_correlation = MatrixFromJson(json.at("copula_correlation"));
    if (model.marginals.size() != model.schema.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "marginal count does not match schema width");
    }
    return model;
  });
}

data::Table LoadExternalSynthetic(const std::filesystem::path& path,
                                  const data::Schema& schema) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kFileNotFound,
                "external synthetic table not found: " + path.string());
  }
  return data::LoadTableFile(path, schema, {.strict_continuous = true});
}

}  // namespace synthbench::generators
