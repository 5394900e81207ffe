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

#include "synthbench/scoring/report.h"

#include "synthbench/error.h"

namespace synthbench::scoring {
namespace {

using nlohmann::json;

json MetricsToJson(const utility::UtilityMetrics& m) {
  return {{"accuracy", m.accuracy}, {"f1_macro", m.f1_macro},
          {"roc_auc", m.roc_auc}};
}

utility::UtilityMetrics MetricsFromJson(const json& j) {
  return {j.at("accuracy").get<double>(), j.at("f1_macro").get<double>(),
          j.at("roc_auc").get<double>()};
}

json SummaryToJson(const data::DatasetSummary& s) {
  return {{"n_rows", s.n_rows},
          {"n_continuous", s.n_continuous},
          {"n_binary", s.n_binary},
          {"n_multiclass", s.n_multiclass},
          {"imbalance_ratio", OptionalToJson(s.imbalance_ratio)}};
}

data::DatasetSummary SummaryFromJson(const json& j) {
  data::DatasetSummary s;
  s.n_rows = j.at("n_rows").get<std::size_t>();
  s.n_continuous = j.at("n_continuous").get<std::size_t>();
  s.n_binary = j.at("n_binary").get<std::size_t>();
  s.n_multiclass = j.at("n_multiclass").get<std::size_t>();
  s.imbalance_ratio = OptionalFromJson(j.at("imbalance_ratio"));
  return s;
}

json ResemblanceToJson(const resemblance::ResemblanceReport& r) {
  return {{"avg_jsd", OptionalToJson(r.avg_jsd)},
          {"avg_wd", OptionalToJson(r.avg_wd)},
          {"corr_diff", r.corr_diff},
          {"corr_norm", r.corr_norm},
          {"per_column_jsd", r.per_column_jsd},
          {"per_column_wd", r.per_column_wd},
          {"warnings", r.warnings}};
}

resemblance::ResemblanceReport ResemblanceFromJson(const json& j) {
  resemblance::ResemblanceReport r;
  r.avg_jsd = OptionalFromJson(j.at("avg_jsd"));
  r.avg_wd = OptionalFromJson(j.at("avg_wd"));
  r.corr_diff = j.at("corr_diff").get<double>();
  r.corr_norm = j.at("corr_norm").get<std::string>();
  r.per_column_jsd = j.at("per_column_jsd").get<std::map<std::string, double>>();
  r.per_column_wd = j.at("per_column_wd").get<std::map<std::string, double>>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

json UtilityToJson(const utility::UtilityReport& u) {
  json classifiers = json::array();
  for (const utility::ClassifierResult& c : u.classifiers) {
    classifiers.push_back({{"kind", utility::ClassifierKindName(c.kind)},
                           {"trtr", MetricsToJson(c.trtr)},
                           {"tstr", MetricsToJson(c.tstr)},
                           {"diff", MetricsToJson(c.diff)}});
  }
  return {{"target", u.target},
          {"class_labels", u.class_labels},
          {"target_binned", u.target_binned()},
          {"bin_edges", u.bin_edges},
          {"classifiers", classifiers},
          {"average",
           {{"trtr", MetricsToJson(u.average_trtr)},
            {"tstr", MetricsToJson(u.average_tstr)},
            {"diff", MetricsToJson(u.average_diff)}}}};
}

utility::UtilityReport UtilityFromJson(const json& j) {
  utility::UtilityReport u;
  u.target = j.at("target").get<std::string>();
  u.class_labels = j.at("class_labels").get<std::vector<std::string>>();
  u.bin_edges = j.at("bin_edges").get<std::vector<double>>();
  for (const json& c : j.at("classifiers")) {
    utility::ClassifierResult r;
    r.kind = utility::ParseClassifierKind(c.at("kind").get<std::string>());
    r.trtr = MetricsFromJson(c.at("trtr"));
    r.tstr = MetricsFromJson(c.at("tstr"));
    r.diff = MetricsFromJson(c.at("diff"));
    u.classifiers.push_back(r);
  }
  const json& avg = j.at("average");
  u.average_trtr = MetricsFromJson(avg.at("trtr"));
  u.average_tstr = MetricsFromJson(avg.at("tstr"));
  u.average_diff = MetricsFromJson(avg.at("diff"));
  return u;
}

json PrivacyToJson(const privacy::PrivacyReport& p) {
  const privacy::DistanceReport& d = p.distances;
  json thresholds = json::array();
  for (const privacy::ThresholdResult& t : p.mia.per_threshold) {
    thresholds.push_back({{"threshold", t.threshold},
                          {"precision", OptionalToJson(t.precision)},
                          {"accuracy", t.accuracy},
                          {"recall", t.recall}});
  }
  return {{"distances",
           {{"dcr_real_synth", d.dcr_real_synth},
            {"dcr_within_real", d.dcr_within_real},
            {"dcr_within_synth", d.dcr_within_synth},
            {"nndr_real_synth", OptionalToJson(d.nndr_real_synth)},
            {"nndr_within_real", OptionalToJson(d.nndr_within_real)},
            {"nndr_within_synth", OptionalToJson(d.nndr_within_synth)},
            {"model_collapse", d.model_collapse}}},
          {"mia",
           {{"members", p.mia.members},
            {"non_members", p.mia.non_members},
            {"score", p.mia.score},
            {"thresholds", thresholds}}}};
}

privacy::PrivacyReport PrivacyFromJson(const json& j) {
  privacy::PrivacyReport p;
  const json& d = j.at("distances");
  p.distances.dcr_real_synth = d.at("dcr_real_synth").get<double>();
  p.distances.dcr_within_real = d.at("dcr_within_real").get<double>();
  p.distances.dcr_within_synth = d.at("dcr_within_synth").get<double>();
  p.distances.nndr_real_synth = OptionalFromJson(d.at("nndr_real_synth"));
  p.distances.nndr_within_real = OptionalFromJson(d.at("nndr_within_real"));
  p.distances.nndr_within_synth = OptionalFromJson(d.at("nndr_within_synth"));
  p.distances.model_collapse = d.at("model_collapse").get<bool>();
  const json& m = j.at("mia");
  p.mia.members = m.at("members").get<std::size_t>();
  p.mia.non_members = m.at("non_members").get<std::size_t>();
  p.mia.score = m.at("score").get<int>();
  for (const json& t : m.at("thresholds")) {
    privacy::ThresholdResult r;
    r.threshold = t.at("threshold").get<double>();
    r.precision = OptionalFromJson(t.at("precision"));
    r.accuracy = t.at("accuracy").get<double>();
    r.recall = t.at("recall").get<double>();
    p.mia.per_threshold.push_back(r);
  }
  return p;
}

}  // namespace

std::string_view ToolVersion() { return SYNTHBENCH_VERSION; }

json OptionalToJson(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> OptionalFromJson(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json ReportToJson(const EvaluationReport& r) {
  return {{"spec_version", kSpecVersion},
          {"tool_version", r.tool_version},
          {"dataset", r.dataset},
          {"generator", r.generator},
          {"seed", r.seed},
          {"stage_seeds", r.stage_seeds},
          {"synthetic_rows", r.synthetic_rows},
          {"train_fraction", r.train_fraction},
          {"summary", SummaryToJson(r.summary)},
          {"resemblance", ResemblanceToJson(r.resemblance)},
          {"utility", UtilityToJson(r.utility)},
          {"privacy", PrivacyToJson(r.privacy)},
          {"warnings", r.warnings}};
}

EvaluationReport ReportFromJson(const json& j) {
  try {
    if (j.at("spec_version").get<int>() != kSpecVersion) {
      throw Error(ErrorCode::kSchemaMismatch, "unsupported report version");
    }
    EvaluationReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.dataset = j.at("dataset").get<std::string>();
    r.generator = j.at("generator").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.stage_seeds =
        j.at("stage_seeds").get<std::map<std::string, std::uint64_t>>();
    r.synthetic_rows = j.at("synthetic_rows").get<std::size_t>();
    r.train_fraction = j.at("train_fraction").get<double>();
    r.summary = SummaryFromJson(j.at("summary"));
    r.resemblance = ResemblanceFromJson(j.at("resemblance"));
    r.utility = UtilityFromJson(j.at("utility"));
    r.privacy = PrivacyFromJson(j.at("privacy"));
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch,
                std::string("malformed report: ") + e.what());
  }
}

}  // namespace synthbench::scoring
