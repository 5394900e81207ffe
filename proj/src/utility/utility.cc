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

#include "synthbench/utility/utility.h"

#include "synthbench/data/encoding.h"
#include "synthbench/error.h"
#include "synthbench/random.h"
#include "synthbench/utility/target.h"

namespace synthbench::utility {

UtilityMetrics MeanMetrics(const std::vector<UtilityMetrics>& metrics) {
  UtilityMetrics mean;
  if (metrics.empty()) return mean;
  for (const UtilityMetrics& m : metrics) {
    mean.accuracy += m.accuracy;
    mean.f1_macro += m.f1_macro;
    mean.roc_auc += m.roc_auc;
  }
  const auto n = static_cast<double>(metrics.size());
  mean.accuracy /= n;
  mean.f1_macro /= n;
  mean.roc_auc /= n;
  return mean;
}

UtilityReport TstrTrtr(const data::Table& real_train,
                       const data::Table& real_eval,
                       const data::Table& synthetic, std::string_view target,
                       std::uint64_t seed, const UtilityOptions& options) {
  if (!real_train.schema().CompatibleWith(real_eval.schema()) ||
      !real_train.schema().CompatibleWith(synthetic.schema())) {
    throw Error(ErrorCode::kSchemaMismatch,
                "utility tables do not share a schema");
  }
  const TargetEncoder target_encoder =
      TargetEncoder::Fit(real_train, target, options.target_quantiles);
  const PreparedTarget train = PrepareTarget(target_encoder, real_train);
  const PreparedTarget eval = PrepareTarget(target_encoder, real_eval);
  const PreparedTarget synth = PrepareTarget(target_encoder, synthetic);
  const data::Encoder encoder = data::Encoder::Fit(train.features);
  const data::EncodedMatrix x_train = encoder.Transform(train.features);
  const data::EncodedMatrix x_eval = encoder.Transform(eval.features);
  const data::EncodedMatrix x_synth = encoder.Transform(synth.features);

  UtilityReport report;
  report.target = std::string(target);
  report.class_labels = target_encoder.class_labels();
  report.bin_edges = target_encoder.edges();
  std::vector<UtilityMetrics> trtr, tstr, diff;
  for (ClassifierKind kind : options.kinds) {
    const std::uint64_t kind_seed =
        DeriveSeed(seed, "utility/" + std::string(ClassifierKindName(kind)));
    const ClassifierModel real_model = TrainClassifier(
        kind, x_train, train.labels, report.class_labels, kind_seed);
    const ClassifierModel synth_model = TrainClassifier(
        kind, x_synth, synth.labels, report.class_labels, kind_seed);
    ClassifierResult r;
    r.kind = kind;
    r.trtr = ClassificationMetrics(eval.labels, real_model.PredictProba(x_eval));
    r.tstr =
        ClassificationMetrics(eval.labels, synth_model.PredictProba(x_eval));
    r.diff = r.trtr - r.tstr;
    report.classifiers.push_back(r);
    trtr.push_back(r.trtr);
    tstr.push_back(r.tstr);
    diff.push_back(r.diff);
  }
  report.average_trtr = MeanMetrics(trtr);
  report.average_tstr = MeanMetrics(tstr);
  report.average_diff = MeanMetrics(diff);
  return report;
}

}  // namespace synthbench::utility
