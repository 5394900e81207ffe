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

#include "synthbench/scoring/emit.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "synthbench/data/csv.h"
#include "synthbench/error.h"

namespace synthbench::scoring {
namespace {

using nlohmann::json;

std::string Fixed(double v, int digits = 3) {
  if (!std::isfinite(v)) return "NaN";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Fixed(const std::optional<double>& v, int digits = 3) {
  return v ? Fixed(*v, digits) : std::string("NaN");
}

std::string Row(const std::vector<std::string>& cells) {
  std::string s = "|";
  for (const std::string& c : cells) s += " " + c + " |";
  return s + "\n";
}

std::string Rule(std::size_t n) {
  std::string s = "|";
  for (std::size_t i = 0; i < n; ++i) s += " --- |";
  return s + "\n";
}

std::string Table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::string s = Row(header) + Rule(header.size());
  for (const auto& r : rows) s += Row(r);
  return s + "\n";
}

std::string ImbalanceCell(const data::DatasetSummary& s) {
  return s.imbalance_ratio ? Fixed(*s.imbalance_ratio, 2) : "NA";
}

std::string ReportMarkdown(const EvaluationReport& r) {
  std::ostringstream md;
  md << "# Synthetic data evaluation: " << r.generator << " on " << r.dataset
     << "\n\n";
  md << "Seed " << r.seed << ", " << r.synthetic_rows
     << " synthetic rows, train fraction " << Fixed(r.train_fraction, 2)
     << ", synthbench " << r.tool_version << ".\n\n";

  if (r.privacy.distances.model_collapse) {
    md << "> **Warning: model collapse.** DCR within synthetic data ("
       << Fixed(r.privacy.distances.dcr_within_synth)
       << ") is below half of DCR within real data ("
       << Fixed(r.privacy.distances.dcr_within_real) << ").\n\n";
  }
  if (r.utility.target_binned()) {
    md << "> Continuous target '" << r.utility.target
       << "' was binned into classes for the utility metrics.\n\n";
  }

  const data::DatasetSummary& s = r.summary;
  md << "## Dataset\n\n"
     << Table({"Dataset ID", "Num. records", "#C", "#B", "#M", "#Mi"},
              {{r.dataset, std::to_string(s.n_rows),
                std::to_string(s.n_continuous), std::to_string(s.n_binary),
                std::to_string(s.n_multiclass), ImbalanceCell(s)}});

  md << "## Resemblance\n\n"
     << Table({"Algorithm", "Dataset ID", "JSD", "WD",
               "Correlation distance. diff"},
              {{r.generator, r.dataset, Fixed(r.resemblance.avg_jsd),
                Fixed(r.resemblance.avg_wd), Fixed(r.resemblance.corr_diff)}});

  std::vector<std::vector<std::string>> util_rows;
  auto util_row = [&](const std::string& name, const utility::UtilityMetrics& trtr,
                      const utility::UtilityMetrics& tstr,
                      const utility::UtilityMetrics& diff) {
    util_rows.push_back({name, Fixed(diff.accuracy), Fixed(diff.f1_macro),
                         Fixed(diff.roc_auc), Fixed(trtr.accuracy),
                         Fixed(tstr.accuracy), Fixed(trtr.f1_macro),
                         Fixed(tstr.f1_macro), Fixed(trtr.roc_auc),
                         Fixed(tstr.roc_auc)});
  };
  for (const auto& c : r.utility.classifiers) {
    util_row(std::string(utility::ClassifierKindName(c.kind)), c.trtr, c.tstr,
             c.diff);
  }
  util_row("Average", r.utility.average_trtr, r.utility.average_tstr,
           r.utility.average_diff);
  md << "## Machine learning utility\n\n"
     << Table({"Classifier", "Accuracy Diff", "F-1 score Diff", "ROC AUC Diff",
               "TRTR Accuracy", "TSTR Accuracy", "TRTR F-1", "TSTR F-1",
               "TRTR ROC AUC", "TSTR ROC AUC"},
              util_rows);

  const privacy::DistanceReport& d = r.privacy.distances;
  md << "## Privacy: distance to closest record\n\n"
     << Table({"DCR between Real and Synthetic (5th perc)",
               "DCR within Real (5th perc)", "DCR within Synthetic (5th perc)",
               "NNDR between Real and Synthetic (5th perc)",
               "NNDR within Real (5th perc)",
               "NNDR within Synthetic (5th perc)"},
              {{Fixed(d.dcr_real_synth), Fixed(d.dcr_within_real),
                Fixed(d.dcr_within_synth), Fixed(d.nndr_real_synth),
                Fixed(d.nndr_within_real), Fixed(d.nndr_within_synth)}});

  std::vector<std::string> mia_header = {"Algorithm", "Dataset ID"};
  std::vector<std::string> mia_row = {r.generator, r.dataset};
  for (const auto& t : r.privacy.mia.per_threshold) {
    const std::string th = data::FormatReal(t.threshold);
    mia_header.push_back("Threshold " + th + " Precision");
    mia_header.push_back("Threshold " + th + " Accuracy");
    mia_row.push_back(t.precision ? Fixed(*t.precision, 2) : "undefined");
    mia_row.push_back(Fixed(t.accuracy, 2));
  }
  mia_header.push_back("Evaluation");
  mia_row.push_back(std::to_string(r.privacy.mia.score));
  md << "## Privacy: membership inference attack\n\n"
     << "Attacker set: " << r.privacy.mia.members << " members, "
     << r.privacy.mia.non_members << " non-members.\n\n"
     << Table(mia_header, {mia_row});

  if (!r.warnings.empty()) {
    md << "## Warnings\n\n";
    for (const std::string& w : r.warnings) md << "- Warning: " << w << "\n";
    md << "\n";
  }
  std::string out = md.str();
  while (out.size() > 1 && out[out.size() - 2] == '\n') out.pop_back();
  return out;
}

std::string MetricCell(const AggregateResult& a, const std::string& name) {
  auto it = a.mean.find(name);
  return it == a.mean.end() ? "NA" : Fixed(it->second);
}

std::string RecommendationMarkdown(const BenchmarkResult& b) {
  const Recommendation& rec = b.recommendation;
  std::ostringstream md;
  md << "# Generator recommendation: " << rec.scenario.name << " scenario\n\n"
     << "Weights: resemblance " << Fixed(rec.scenario.resemblance) << ", utility "
     << Fixed(rec.scenario.utility) << ", privacy "
     << Fixed(rec.scenario.privacy) << ".\n\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < rec.ranking.size(); ++i) {
    const RankedGenerator& g = rec.ranking[i];
    rows.push_back({std::to_string(i + 1), g.generator,
                    Fixed(g.weighted_score), Fixed(g.dimensions.resemblance),
                    Fixed(g.dimensions.utility), Fixed(g.dimensions.privacy)});
  }
  md << Table({"Rank", "Generator", "Weighted score", "Resemblance", "Utility",
               "Privacy"},
              rows);
  std::vector<std::vector<std::string>> avg;
  for (const auto& [gen, a] : b.aggregates) {
    avg.push_back({gen, MetricCell(a, "jsd"), MetricCell(a, "wd"),
                   MetricCell(a, "corr_diff"), MetricCell(a, "accuracy_diff"),
                   MetricCell(a, "f1_diff"), MetricCell(a, "auc_diff"),
                   MetricCell(a, "dcr_real_synth"),
                   MetricCell(a, "nndr_real_synth"),
                   MetricCell(a, "mia_score")});
  }
  md << "## Averages across datasets\n\n"
     << Table({"Algorithm", "JSD", "WD", "Correlation distance. diff",
               "Accuracy Diff", "F-1 score Diff", "ROC AUC Diff",
               "DCR between Real and Synthetic (5th perc)",
               "NNDR between Real and Synthetic (5th perc)", "MIA score"},
              avg);
  std::vector<std::string> notes = rec.tie_notes;
  notes.insert(notes.end(), b.scores.warnings.begin(), b.scores.warnings.end());
  for (const auto& [gen, a] : b.aggregates) {
    for (const std::string& n : a.notes) notes.push_back(gen + ": " + n);
  }
  if (!notes.empty()) {
    md << "## Notes\n\n";
    for (const std::string& n : notes) md << "- " << n << "\n";
    md << "\n";
  }
  std::string out = md.str();
  while (out.size() > 1 && out[out.size() - 2] == '\n') out.pop_back();
  return out;
}

json DimensionToJson(const DimensionScore& s) {
  return {{"resemblance", s.resemblance},
          {"utility", s.utility},
          {"privacy", s.privacy}};
}

}  // namespace

Format ParseFormat(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "markdown" || name == "md") return Format::kMarkdown;
  throw Error(ErrorCode::kUnsupportedFormat,
              "unsupported format '" + std::string(name) + "'");
}

std::string CanonicalJson(const json& j) { return j.dump(2) + "\n"; }

BenchmarkResult Score(const std::vector<EvaluationReport>& reports,
                      const ScenarioWeights& weights) {
  BenchmarkResult b;
  b.aggregates = Aggregate(reports);
  std::map<std::string, MetricMap> raw;
  for (const auto& [gen, a] : b.aggregates) raw[gen] = a.mean;
  b.scores = ComputeDimensionScores(raw);
  b.recommendation = ScenarioRank(b.scores, weights);
  return b;
}

json RecommendationToJson(const BenchmarkResult& b) {
  const Recommendation& rec = b.recommendation;
  json ranking = json::array();
  for (std::size_t i = 0; i < rec.ranking.size(); ++i) {
    const RankedGenerator& g = rec.ranking[i];
    ranking.push_back({{"rank", i + 1},
                       {"generator", g.generator},
                       {"weighted_score", g.weighted_score},
                       {"scores", DimensionToJson(g.dimensions)}});
  }
  json aggregates = json::object();
  for (const auto& [gen, a] : b.aggregates) {
    aggregates[gen] = {{"mean", a.mean},
                       {"count", a.count},
                       {"datasets", a.cells},
                       {"notes", a.notes}};
  }
  return {{"spec_version", kSpecVersion},
          {"tool_version", std::string(ToolVersion())},
          {"scenario",
           {{"name", rec.scenario.name},
            {"weights",
             {{"resemblance", rec.scenario.resemblance},
              {"utility", rec.scenario.utility},
              {"privacy", rec.scenario.privacy}}}}},
          {"ranking", ranking},
          {"tie_notes", rec.tie_notes},
          {"constituents", b.scores.constituents},
          {"warnings", b.scores.warnings},
          {"aggregates", aggregates}};
}

std::string EmitReport(const EvaluationReport& report, Format format) {
  return format == Format::kJson ? CanonicalJson(ReportToJson(report))
                                 : ReportMarkdown(report);
}

std::string EmitRecommendation(const BenchmarkResult& result, Format format) {
  return format == Format::kJson ? CanonicalJson(RecommendationToJson(result))
                                 : RecommendationMarkdown(result);
}

}  // namespace synthbench::scoring
