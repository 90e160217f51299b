// Copyright 2026 The seftpp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seftpp_app/commands.hpp"

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "seftpp/scenario.hpp"
#include "seftpp/validator.hpp"
#include "seftpp_app/bench.hpp"
#include "seftpp_app/path_io.hpp"
#include "seftpp_app/svg.hpp"

namespace seftpp::app
{

int runPlan(const PlanOptions & options, std::ostream & out, std::ostream & err)
{
  Scenario scenario;
  try {
    scenario = loadScenario(options.scenario);
  } catch (const ScenarioError & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  PlanResult result;
  try {
    result = plan(scenario, options.strategy);
  } catch (const InvalidStartError & e) {
    err << "error: field 'start': " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  char line[256];
  std::snprintf(line, sizeof(line),
    "status: %s\nstrategy: %s\nexpanded: %zu\ngenerated: %zu\nguaranteed: %zu\nchecked: %zu\n"
    "wall_time_ms: %.3f\n",
    toString(result.status).c_str(), toString(options.strategy).c_str(), result.stats.expanded,
    result.stats.generated, result.stats.guaranteedPrimitives, result.stats.checkedPrimitives,
    result.stats.wallTimeMs);
  out << line;
  if (result.found()) {
    std::snprintf(line, sizeof(line), "cost: %.6f\nposes: %zu\n", result.cost,
      result.path.size());
    out << line << "h_signature: " << toString(result.h) << "\n";
  }

  try {
    if (options.stats) {
      writeTextFile(*options.stats, statsJson(result, options.strategy));
    }
    if (options.out && result.found()) {
      writeTextFile(*options.out, formatPath(result.path));
    }
    if (options.svg) {
      writeTextFile(*options.svg, renderSvg(scenario, result));
    }
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return result.found() ? kExitOk : kExitNoPath;
}

int runValidate(const ValidateOptions & options, std::ostream & out, std::ostream & err)
{
  Scenario scenario;
  std::vector<Pose2> path;
  try {
    scenario = loadScenario(options.scenario);
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  try {
    path = readPathFile(options.path);
  } catch (const ParseError & e) {
    err << "error: path file line " << e.line() << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!(options.step > 0.0)) {
    err << "error: --step must be positive\n";
    return kExitInputError;
  }
  try {
    const ValidationReport report = validatePath(scenario, path, options.step);
    out << describe(report);
    return report.ok() ? kExitOk : kExitNoPath;
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int runBenchCommand(const BenchOptions & options, std::ostream & out, std::ostream & err)
{
  BenchConfig config;
  try {
    config = loadBenchConfig(options.config);
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const std::vector<BenchRow> rows = runBench(config, benchThreadsFromEnv());
  try {
    writeTextFile(options.out, benchCsv(rows));
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  out << benchTable(rows);
  return kExitOk;
}

int runCli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Tethered robot path planner"};
  app.require_subcommand(1);

  PlanOptions planOpts;
  std::string planScenario;
  std::string svg;
  std::string outFile;
  std::string statsFile;
  bool improved = false;
  bool normal = false;
  auto * planCmd = app.add_subcommand("plan", "Plan a path for a scenario");
  planCmd->add_option("--scenario", planScenario, "Scenario JSON file")->required();
  auto * improvedFlag = planCmd->add_flag("--improved", improved, "Improved expansion (default)");
  planCmd->add_flag("--normal", normal, "Check every waypoint configuration")
  ->excludes(improvedFlag);
  planCmd->add_option("--svg", svg, "Write an SVG rendering");
  planCmd->add_option("--out", outFile, "Write the path (x y theta per line)");
  planCmd->add_option("--stats", statsFile, "Write search statistics as JSON");

  ValidateOptions valOpts;
  std::string valScenario;
  std::string valPath;
  auto * valCmd = app.add_subcommand("validate", "Check a path densely against all constraints");
  valCmd->add_option("--scenario", valScenario, "Scenario JSON file")->required();
  valCmd->add_option("--path", valPath, "Path file")->required();
  valCmd->add_option("--step", valOpts.step, "Sampling step")->capture_default_str();

  BenchOptions benchOpts;
  std::string benchConfig;
  std::string benchOut;
  auto * benchCmd = app.add_subcommand("bench", "Compare expansion strategies over a grid");
  benchCmd->add_option("--config", benchConfig, "Bench config JSON")->required();
  benchCmd->add_option("--out", benchOut, "CSV output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError & e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (planCmd->parsed()) {
    planOpts.scenario = planScenario;
    planOpts.strategy = normal ? ExpansionStrategy::Normal : ExpansionStrategy::Improved;
    if (!svg.empty()) {
      planOpts.svg = svg;
    }
    if (!outFile.empty()) {
      planOpts.out = outFile;
    }
    if (!statsFile.empty()) {
      planOpts.stats = statsFile;
    }
    return runPlan(planOpts, out, err);
  }
  if (valCmd->parsed()) {
    valOpts.scenario = valScenario;
    valOpts.path = valPath;
    return runValidate(valOpts, out, err);
  }
  benchOpts.config = benchConfig;
  benchOpts.out = benchOut;
  return runBenchCommand(benchOpts, out, err);
}

}  // namespace seftpp::app
