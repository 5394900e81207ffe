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

#include "synthbench/cli/cli.h"

#include <cerrno>
#include <cstdlib>

#include "CLI11.hpp"
#include "synthbench/cli/pipeline.h"
#include "synthbench/data/csv.h"
#include "synthbench/error.h"

namespace synthbench::cli {
namespace {

struct Flags {
  std::string real;
  std::string schema;
  std::string target;
  std::vector<std::string> gens;
  std::size_t rows = 5000;
  double train_fraction = kDefaultTrainFraction;
  std::uint64_t seed = kDefaultSeed;
  std::string scenario = "balanced";
  std::string weights;
  std::string out = "synthbench_out";
  std::vector<std::string> formats = {"json", "markdown"};
};

void AddCommonFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--real", f.real, "Real data CSV")->required();
  cmd->add_option("--schema", f.schema, "Schema sidecar JSON (default: infer)");
  cmd->add_option("--target", f.target,
                  "Target column (default: the schema's target)");
  cmd->add_option("--rows", f.rows, "Synthetic rows to sample")
      ->capture_default_str();
  cmd->add_option("--train-fraction", f.train_fraction,
                  "Share of real rows used for fitting")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed,
                  "Global seed (default 42, or $SYNTHBENCH_SEED)");
  cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
}

std::uint64_t SeedFromEnvironment() {
  const char* env = std::getenv("SYNTHBENCH_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || env[0] == '-') {
    throw Error(ErrorCode::kInvalidArgument,
                "SYNTHBENCH_SEED is not an unsigned integer: " +
                    std::string(env));
  }
  return v;
}

RunConfig ToConfig(const Flags& f, bool seed_given, bool weights_given) {
  RunConfig c;
  c.real_path = f.real;
  if (!f.schema.empty()) c.schema_path = f.schema;
  if (!f.target.empty()) c.target = f.target;
  for (const std::string& g : f.gens) c.generators.push_back(ParseGeneratorSpec(g));
  c.rows = f.rows;
  c.train_fraction = f.train_fraction;
  c.seed = seed_given ? f.seed : SeedFromEnvironment();
  if (weights_given || f.scenario == "custom") {
    if (!weights_given) {
      throw Error(ErrorCode::kInvalidArgument, "--scenario custom needs --weights");
    }
    c.scenario = scoring::ParseCustomWeights(f.weights);
  } else {
    c.scenario = scoring::ScenarioByName(f.scenario);
  }
  c.out_dir = f.out;
  c.formats.clear();
  for (const std::string& fmt : f.formats) {
    c.formats.push_back(scoring::ParseFormat(fmt));
  }
  return c;
}

std::string OneLine(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Generate synthetic tabular data and evaluate its resemblance, "
               "utility, and privacy."};
  app.name("synthbench");
  app.require_subcommand(1);
  Flags gen_flags;
  Flags eval_flags;
  CLI::App* generate =
      app.add_subcommand("generate", "Fit one generator and sample a table");
  AddCommonFlags(generate, gen_flags);
  generate->add_option("--gen", gen_flags.gens, "Generator: gm | gc")
      ->required();
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Benchmark generators and recommend one per scenario");
  AddCommonFlags(evaluate, eval_flags);
  eval_flags.gens = {"gm", "gc"};
  evaluate->add_option("--gen", eval_flags.gens,
                       "Generator: gm | gc | external:<csv>, repeatable")
      ->capture_default_str();
  evaluate->add_option("--scenario", eval_flags.scenario,
                       "balanced | utility | privacy | custom")
      ->capture_default_str();
  evaluate->add_option("--weights", eval_flags.weights,
                       "Custom weights: resemblance,utility,privacy");
  evaluate->add_option("--format", eval_flags.formats,
                       "Report formats: json, markdown")
      ->delimiter(',')
      ->capture_default_str();

  std::vector<std::string> argv_storage = {"synthbench"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  }

  const bool is_generate = generate->parsed();
  Flags& flags = is_generate ? gen_flags : eval_flags;
  CLI::App* cmd = is_generate ? generate : evaluate;
  RunConfig config;
  try {
    config = ToConfig(flags, cmd->count("--seed") > 0,
                      !is_generate && evaluate->count("--weights") > 0);
    config.Validate();
    if (is_generate && (config.generators.size() != 1 ||
                        !config.generators[0].fittable())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generate needs exactly one fittable generator (gm or gc)");
    }
  } catch (const std::exception& e) {
    err << "error: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    if (is_generate) {
      for (const auto& p : RunGenerate(config)) out << "wrote " << p.string() << "\n";
      return kExitOk;
    }
    const EvaluateResult result = RunEvaluate(config);
    for (const auto& report : result.reports) {
      out << SummaryLine(*result.benchmark, report) << "\n";
    }
    if (result.benchmark) {
      out << "recommended (" << config.scenario.name
          << "): " << result.benchmark->recommendation.ranking.front().generator
          << "\n";
    }
    for (const std::string& f : result.failures) {
      err << "error: " << OneLine(f) << "\n";
    }
    return result.failures.empty() ? kExitOk : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << OneLine(e.what()) << "\n";
    return kExitFailure;
  }
}

}  // namespace synthbench::cli
