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

#include "synthbench/cli/pipeline.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "synthbench/data/csv.h"
#include "synthbench/data/preprocess.h"
#include "synthbench/data/schema_io.h"
#include "synthbench/error.h"
#include "synthbench/generators/gaussian_copula.h"
#include "synthbench/generators/gaussian_multivariate.h"
#include "synthbench/generators/model_io.h"
#include "synthbench/privacy/privacy.h"
#include "synthbench/random.h"
#include "synthbench/resemblance/resemblance.h"
#include "synthbench/utility/utility.h"

namespace synthbench::cli {
namespace fs = std::filesystem;

namespace {

std::string Sanitize(std::string s) {
  for (char& c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_';
    if (!ok) c = '_';
  }
  return s;
}

void WriteFile(const fs::path& path, const std::string& contents,
               std::vector<fs::path>* written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.close();
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  }
  if (written) written->push_back(path);
}

bool SamePath(const fs::path& a, const fs::path& b) {
  return fs::weakly_canonical(a) == fs::weakly_canonical(b);
}

// Runs `body`, rethrowing any failure tagged with the stage name.
template <typename F>
auto Stage(const std::string& stage, const std::string& gen, F&& body) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, gen, e);
  }
}

struct Fitted {
  data::Table synthetic;
  std::optional<nlohmann::json> model;
  std::vector<std::string> warnings;
};

Fitted FitAndSample(const GeneratorSpec& spec, const PreparedData& data,
                    std::size_t rows, std::uint64_t seed) {
  Fitted f;
  switch (spec.kind) {
    case GeneratorSpec::Kind::kGaussianMultivariate: {
      const generators::GmModel m =
          generators::FitGaussianMultivariate(data.train);
      f.model = generators::GmModelToJson(m);
      f.synthetic = generators::SampleGaussianMultivariate(m, rows, seed);
      break;
    }
    case GeneratorSpec::Kind::kGaussianCopula: {
      const generators::GcModel m = generators::FitGaussianCopula(data.train);
      f.model = generators::GcModelToJson(m);
      f.synthetic = generators::SampleGaussianCopula(m, rows, seed);
      break;
    }
    case GeneratorSpec::Kind::kExternal: {
      data::Table t =
          generators::LoadExternalSynthetic(spec.path, data.real.schema());
      if (t.HasMissing()) {
        const std::size_t before = t.num_rows();
        t = data::DropMissing(t);
        f.warnings.push_back("dropped " +
                             std::to_string(before - t.num_rows()) +
                             " external rows with missing values");
      }
      f.synthetic = std::move(t);
      break;
    }
  }
  return f;
}

std::string Fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string GeneratorSpec::Name() const {
  switch (kind) {
    case Kind::kGaussianMultivariate:
      return "gm";
    case Kind::kGaussianCopula:
      return "gc";
    case Kind::kExternal:
      return "external_" + Sanitize(path.stem().string());
  }
  return "unknown";
}

GeneratorSpec ParseGeneratorSpec(std::string_view text) {
  GeneratorSpec spec;
  if (text == "gm") {
    spec.kind = GeneratorSpec::Kind::kGaussianMultivariate;
  } else if (text == "gc") {
    spec.kind = GeneratorSpec::Kind::kGaussianCopula;
  } else if (text.substr(0, 9) == "external:" && text.size() > 9) {
    spec.kind = GeneratorSpec::Kind::kExternal;
    spec.path = fs::path(std::string(text.substr(9)));
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown generator '" + std::string(text) +
                    "' (expected gm, gc, or external:<path>)");
  }
  return spec;
}

void RunConfig::Validate() const {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, msg);
  };
  if (real_path.empty()) fail("--real is required");
  if (generators.empty()) fail("no generator selected");
  std::vector<std::string> names;
  for (const GeneratorSpec& g : generators) {
    const std::string name = g.Name();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      fail("generator '" + name + "' selected twice");
    }
    names.push_back(name);
  }
  if (rows == 0) fail("--rows must be positive");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    fail("--train-fraction must lie in (0, 1)");
  }
  if (formats.empty()) fail("no output format selected");
  std::vector<fs::path> inputs = {real_path};
  if (schema_path) inputs.push_back(*schema_path);
  for (const GeneratorSpec& g : generators) {
    if (!g.fittable()) inputs.push_back(g.path);
  }
  for (const fs::path& p : inputs) {
    if (SamePath(p, out_dir)) {
      fail("input " + p.string() + " is the output directory");
    }
  }
  scenario.Validate();
}

StageError::StageError(std::string stage, std::string generator,
                       const std::exception& e)
    : std::runtime_error("stage '" + stage + "'" +
                         (generator.empty() ? std::string()
                                            : " for generator '" + generator + "'") +
                         " failed: " + e.what()),
      stage_(std::move(stage)) {}

PreparedData LoadAndSplit(const RunConfig& config) {
  PreparedData out;
  out.dataset = config.real_path.stem().string();
  data::Table loaded = Stage("load", "", [&] {
    std::optional<data::Schema> schema;
    if (config.schema_path) schema = data::LoadSchemaFile(*config.schema_path);
    return data::LoadTableFile(config.real_path, schema);
  });
  out.real = Stage("preprocess", "", [&] {
    data::Schema schema = loaded.schema();
    if (config.target) schema.target = *config.target;
    if (schema.target && !schema.FindColumn(*schema.target)) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "target column '" + *schema.target + "' not found");
    }
    data::Table typed(std::move(schema), loaded.rows());
    data::Table clean = data::DropMissing(typed);
    if (clean.num_rows() < typed.num_rows()) {
      out.warnings.push_back(
          "dropped " + std::to_string(typed.num_rows() - clean.num_rows()) +
          " real rows with missing values");
    }
    if (clean.num_rows() == 0) {
      throw Error(ErrorCode::kEmptyInput,
                  "no rows left after removing missing values");
    }
    return clean;
  });
  data::Split split = Stage("split", "", [&] {
    return data::SplitTable(out.real, config.train_fraction,
                            DeriveSeed(config.seed, "split"));
  });
  out.train = std::move(split.train);
  out.eval = std::move(split.eval);
  return out;
}

std::vector<fs::path> RunGenerate(const RunConfig& config) {
  config.Validate();
  if (config.generators.size() != 1 || !config.generators[0].fittable()) {
    throw Error(ErrorCode::kInvalidArgument,
                "generate needs exactly one fittable generator (gm or gc)");
  }
  const GeneratorSpec& spec = config.generators[0];
  const PreparedData data = LoadAndSplit(config);
  const std::string name = spec.Name();
  const Fitted f = Stage("generate", name, [&] {
    return FitAndSample(spec, data, config.rows,
                        DeriveSeed(config.seed, "generator/" + name));
  });
  fs::create_directories(config.out_dir);
  std::vector<fs::path> written;
  WriteFile(config.out_dir / ("synthetic_" + name + ".csv"),
            data::WriteCsv(f.synthetic), &written);
  WriteFile(config.out_dir / ("model_" + name + ".json"),
            scoring::CanonicalJson(*f.model), &written);
  return written;
}

EvaluateResult RunEvaluate(const RunConfig& config) {
  config.Validate();
  const PreparedData data = LoadAndSplit(config);
  if (!data.real.schema().target) {
    throw Error(ErrorCode::kInvalidArgument,
                "no target column: pass --target or set it in the schema");
  }
  const std::string target = *data.real.schema().target;
  fs::create_directories(config.out_dir);
  EvaluateResult result;
  const data::DatasetSummary summary = data::Summarize(data.real);
  for (const GeneratorSpec& spec : config.generators) {
    const std::string name = spec.Name();
    try {
      scoring::EvaluationReport r;
      r.dataset = data.dataset;
      r.generator = name;
      r.seed = config.seed;
      r.stage_seeds = {{"split", DeriveSeed(config.seed, "split")},
                       {"generator", DeriveSeed(config.seed, "generator/" + name)},
                       {"utility", DeriveSeed(config.seed, "utility")},
                       {"mia", DeriveSeed(config.seed, "mia")}};
      r.train_fraction = config.train_fraction;
      r.summary = summary;
      r.tool_version = std::string(scoring::ToolVersion());
      r.warnings = data.warnings;

      const Fitted f = Stage("generate", name, [&] {
        return FitAndSample(spec, data, config.rows, r.stage_seeds.at("generator"));
      });
      r.synthetic_rows = f.synthetic.num_rows();
      r.warnings.insert(r.warnings.end(), f.warnings.begin(), f.warnings.end());
      if (f.model) {
        WriteFile(config.out_dir / ("synthetic_" + name + ".csv"),
                  data::WriteCsv(f.synthetic), &result.written);
        WriteFile(config.out_dir / ("model_" + name + ".json"),
                  scoring::CanonicalJson(*f.model), &result.written);
      }

      r.resemblance = Stage("resemblance", name, [&] {
        return resemblance::EvaluateResemblance(data.train, f.synthetic);
      });
      for (const std::string& w : r.resemblance.warnings) {
        r.warnings.push_back("resemblance: " + w);
      }
      r.utility = Stage("utility", name, [&] {
        return utility::TstrTrtr(data.train, data.eval, f.synthetic, target,
                                 r.stage_seeds.at("utility"));
      });
      if (r.utility.target_binned()) {
        std::string edges;
        for (double e : r.utility.bin_edges) {
          edges += (edges.empty() ? "" : ", ") + data::FormatReal(e);
        }
        r.warnings.push_back("continuous target '" + target +
                             "' binned into classes at train-split edge(s) " +
                             edges + " for the utility metrics");
      }
      r.privacy = Stage("privacy", name, [&] {
        privacy::MiaConfig mia;
        mia.seed = r.stage_seeds.at("mia");
        return privacy::EvaluatePrivacy(data.train, data.eval, f.synthetic, mia);
      });
      for (const std::string& w : privacy::PrivacyWarnings(r.privacy)) {
        r.warnings.push_back("privacy: " + w);
      }
      Stage("report", name, [&] {
        for (scoring::Format format : config.formats) {
          const char* ext = format == scoring::Format::kJson ? ".json" : ".md";
          WriteFile(config.out_dir / ("report_" + name + ext),
                    scoring::EmitReport(r, format), &result.written);
        }
        return 0;
      });
      result.reports.push_back(std::move(r));
    } catch (const StageError& e) {
      result.failures.push_back(e.what());
    }
  }
  if (!result.reports.empty()) {
    result.benchmark = Stage("recommend", "", [&] {
      return scoring::Score(result.reports, config.scenario);
    });
    WriteFile(config.out_dir / "recommendation.json",
              scoring::EmitRecommendation(*result.benchmark, scoring::Format::kJson),
              &result.written);
    for (scoring::Format format : config.formats) {
      if (format == scoring::Format::kMarkdown) {
        WriteFile(config.out_dir / "recommendation.md",
                  scoring::EmitRecommendation(*result.benchmark, format),
                  &result.written);
      }
    }
  }
  return result;
}

std::string SummaryLine(const scoring::BenchmarkResult& benchmark,
                        const scoring::EvaluationReport& report) {
  const scoring::DimensionScore& s = benchmark.scores.scores.at(report.generator);
  return report.generator + ": resemblance=" + Fixed3(s.resemblance) +
         " utility=" + Fixed3(s.utility) + " privacy=" + Fixed3(s.privacy) +
         " mia_score=" + std::to_string(report.privacy.mia.score);
}

}  // namespace synthbench::cli
