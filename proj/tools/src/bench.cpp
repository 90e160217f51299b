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

#include "seftpp_app/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <thread>

#include <nlohmann/json.hpp>

#include "seftpp/scenario.hpp"
#include "seftpp_app/path_io.hpp"

namespace seftpp::app
{

namespace
{

std::vector<double> positiveList(const nlohmann::json & j, const char * field)
{
  if (!j.is_array() || j.empty()) {
    throw ScenarioError(field, "expected a non-empty array of numbers");
  }
  std::vector<double> out;
  for (const auto & v : j) {
    if (!v.is_number() || !(v.get<double>() > 0.0)) {
      throw ScenarioError(field, "entries must be positive numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

double kappaMaxOf(const Scenario & s)
{
  double k = 0.0;
  for (const auto & m : s.primitives) {
    k = std::max(k, std::abs(m.kappa));
  }
  return k;
}

std::string fmt(const char * f, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

}  // namespace

BenchConfig parseBenchConfig(std::string_view json, const std::filesystem::path & baseDir)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error & e) {
    throw ScenarioError("<document>", e.what());
  }
  if (!j.is_object()) {
    throw ScenarioError("<document>", "expected an object");
  }
  BenchConfig c;
  if (!j.contains("scenarios") || !j["scenarios"].is_array() || j["scenarios"].empty()) {
    throw ScenarioError("scenarios", "expected a non-empty array of file names");
  }
  for (const auto & s : j["scenarios"]) {
    if (!s.is_string()) {
      throw ScenarioError("scenarios", "entries must be strings");
    }
    std::filesystem::path p(s.get<std::string>());
    c.scenarios.push_back(p.is_absolute() ? p : baseDir / p);
  }
  if (j.contains("lengths")) {
    c.lengths = positiveList(j["lengths"], "lengths");
  }
  if (j.contains("resolutions")) {
    c.resolutions = positiveList(j["resolutions"], "resolutions");
  }
  if (j.contains("repetitions")) {
    if (!j["repetitions"].is_number_integer() || j["repetitions"].get<int>() < 1) {
      throw ScenarioError("repetitions", "expected a positive integer");
    }
    c.repetitions = j["repetitions"].get<int>();
  }
  if (j.contains("strategies")) {
    c.strategies.clear();
    if (!j["strategies"].is_array() || j["strategies"].empty()) {
      throw ScenarioError("strategies", "expected a non-empty array");
    }
    for (const auto & s : j["strategies"]) {
      const std::string name = s.is_string() ? s.get<std::string>() : "";
      if (name == "normal") {
        c.strategies.push_back(ExpansionStrategy::Normal);
      } else if (name == "improved") {
        c.strategies.push_back(ExpansionStrategy::Improved);
      } else {
        throw ScenarioError("strategies", "entries must be \"normal\" or \"improved\"");
      }
    }
  }
  return c;
}

BenchConfig loadBenchConfig(const std::filesystem::path & file)
{
  return parseBenchConfig(readTextFile(file), file.parent_path());
}

std::size_t BenchRow::expanded() const
{
  return improved.ran ? improved.stats.expanded : normal.stats.expanded;
}

std::size_t BenchRow::generated() const
{
  return improved.ran ? improved.stats.generated : normal.stats.generated;
}

double BenchRow::guaranteedFraction() const
{
  const PlanStats & s = improved.ran ? improved.stats : normal.stats;
  const std::size_t total = s.guaranteedPrimitives + s.checkedPrimitives;
  return total == 0 ? 0.0 : static_cast<double>(s.guaranteedPrimitives) / total;
}

double BenchRow::timeRatio() const
{
  if (!normal.ran || !improved.ran || normal.meanMs <= 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return improved.meanMs / normal.meanMs;
}

BenchRow runBenchCell(const std::filesystem::path & scenarioFile, double length,
  double resolution, const BenchConfig & config)
{
  BenchRow row;
  row.scenario = scenarioFile.filename().string();
  row.length = length;
  row.resolution = resolution;
  try {
    Scenario s = loadScenario(scenarioFile);
    const double kmax = kappaMaxOf(s);
    s.primitives = defaultPrimitiveSet(kmax, length);
    s.waypointResolution = resolution;
    validateScenario(s);
    const Planner planner(s);
    for (ExpansionStrategy strategy : config.strategies) {
      StrategyTiming & t = strategy == ExpansionStrategy::Normal ? row.normal : row.improved;
      t.ran = true;
      double total = 0.0;
      for (int r = 0; r < config.repetitions; ++r) {
        const PlanResult res = planner.plan(strategy);
        total += res.stats.wallTimeMs;
        t.status = res.status;
        t.stats = res.stats;
        t.cost = res.cost;
      }
      t.meanMs = total / config.repetitions;
    }
    if (row.normal.ran && row.improved.ran) {
      row.consistent = row.normal.stats.expanded == row.improved.stats.expanded &&
        row.normal.stats.generated == row.improved.stats.generated &&
        row.normal.status == row.improved.status &&
        std::abs(row.normal.cost - row.improved.cost) <= 1e-9 * std::max(1.0, row.normal.cost);
    }
  } catch (const std::exception & e) {
    row.failed = true;
    row.error = e.what();
  }
  return row;
}

unsigned benchThreadsFromEnv()
{
  const char * env = std::getenv("SEFTPP_THREADS");
  if (env == nullptr) {
    return 1;
  }
  const long v = std::strtol(env, nullptr, 10);
  return v >= 1 ? static_cast<unsigned>(v) : 1U;
}

std::vector<BenchRow> runBench(const BenchConfig & config, unsigned threads)
{
  struct Cell
  {
    std::filesystem::path scenario;
    double length;
    double resolution;
  };
  std::vector<Cell> cells;
  for (const auto & s : config.scenarios) {
    for (double l : config.lengths) {
      for (double r : config.resolutions) {
        cells.push_back({s, l, r});
      }
    }
  }
  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        rows[i] = runBenchCell(cells[i].scenario, cells[i].length, cells[i].resolution, config);
      }
    };
  const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) {
      pool.emplace_back(worker);
    }
    for (auto & t : pool) {
      t.join();
    }
  }
  return rows;
}

std::string benchCsv(const std::vector<BenchRow> & rows)
{
  std::string out =
    "scenario,length,resolution,status,normal_ms,improved_ms,time_ratio,expanded,generated,"
    "guaranteed_primitives,checked_primitives,guaranteed_fraction,consistent,error\n";
  for (const auto & r : rows) {
    const PlanStats & s = r.improved.ran ? r.improved.stats : r.normal.stats;
    const PlanStatus st = r.improved.ran ? r.improved.status : r.normal.status;
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    out += r.scenario + "," + fmt("%g", r.length) + "," + fmt("%g", r.resolution) + ",";
    out += r.failed ? std::string("failed") : toString(st);
    out += ",";
    out += (r.normal.ran && !r.failed ? fmt("%.3f", r.normal.meanMs) : "") + ",";
    out += (r.improved.ran && !r.failed ? fmt("%.3f", r.improved.meanMs) : "") + ",";
    out += (std::isnan(r.timeRatio()) || r.failed ? "" : fmt("%.3f", r.timeRatio())) + ",";
    if (r.failed) {
      out += ",,,,,";
    } else {
      out += std::to_string(s.expanded) + "," + std::to_string(s.generated) + "," +
        std::to_string(s.guaranteedPrimitives) + "," + std::to_string(s.checkedPrimitives) +
        "," + fmt("%.4f", r.guaranteedFraction()) + ",";
    }
    out += (r.consistent ? "yes" : "no");
    out += "," + err + "\n";
  }
  return out;
}

std::string benchTable(const std::vector<BenchRow> & rows)
{
  const char * head = "%-18s %6s %6s %-14s %11s %11s %6s %9s %9s %7s\n";
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), head, "scenario", "len", "res", "status", "normal_ms",
    "improved_ms", "ratio", "expanded", "generated", "guar%");
  out += buf;
  for (const auto & r : rows) {
    if (r.failed) {
      std::snprintf(buf, sizeof(buf), "%-18s %6g %6g FAILED: %s\n", r.scenario.c_str(), r.length,
        r.resolution, r.error.c_str());
      out += buf;
      continue;
    }
    const PlanStatus st = r.improved.ran ? r.improved.status : r.normal.status;
    const std::string nm = r.normal.ran ? fmt("%.3f", r.normal.meanMs) : "-";
    const std::string im = r.improved.ran ? fmt("%.3f", r.improved.meanMs) : "-";
    const std::string ratio = std::isnan(r.timeRatio()) ? "-" : fmt("%.3f", r.timeRatio());
    std::snprintf(buf, sizeof(buf), "%-18s %6g %6g %-14s %11s %11s %6s %9zu %9zu %6.1f%s\n",
      r.scenario.c_str(), r.length, r.resolution, toString(st).c_str(), nm.c_str(), im.c_str(),
      ratio.c_str(), r.expanded(), r.generated(), 100.0 * r.guaranteedFraction(),
      r.consistent ? "" : " !");
    out += buf;
  }
  return out;
}

}  // namespace seftpp::app
