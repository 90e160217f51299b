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

#ifndef SEFTPP_APP__BENCH_HPP_
#define SEFTPP_APP__BENCH_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "seftpp/planner.hpp"

namespace seftpp::app
{

struct BenchConfig
{
  std::vector<std::filesystem::path> scenarios;
  std::vector<double> lengths{1, 2, 3, 4, 5, 6};
  std::vector<double> resolutions{1.0, 0.7, 0.4, 0.1};
  int repetitions{20};
  std::vector<ExpansionStrategy> strategies{ExpansionStrategy::Normal, ExpansionStrategy::Improved};
};

/// Relative scenario paths are resolved against baseDir.
BenchConfig parseBenchConfig(std::string_view json, const std::filesystem::path & baseDir = {});
BenchConfig loadBenchConfig(const std::filesystem::path & file);

struct StrategyTiming
{
  bool ran{false};
  double meanMs{0.0};
  PlanStatus status{PlanStatus::NoPath};
  PlanStats stats;
  double cost{0.0};
};

/**
 * @brief One (scenario, primitive length, waypoint resolution) cell
 * Counts come from the improved run when it ran, else from the normal run.
 */
struct BenchRow
{
  std::string scenario;
  double length{0.0};
  double resolution{0.0};
  StrategyTiming normal;
  StrategyTiming improved;
  /// Both strategies expanded and generated the same nodes and reached the same cost.
  bool consistent{true};
  bool failed{false};
  std::string error;

  std::size_t expanded() const;
  std::size_t generated() const;
  double guaranteedFraction() const;
  /// improved / normal mean time, NaN unless both ran.
  double timeRatio() const;
};

/// Runs one cell. Never throws; failures are reported in the row.
BenchRow runBenchCell(const std::filesystem::path & scenario, double length, double resolution,
  const BenchConfig & config);

/// Runs every cell with at most `threads` cells in flight.
std::vector<BenchRow> runBench(const BenchConfig & config, unsigned threads);

/// Thread cap from SEFTPP_THREADS, defaulting to 1.
unsigned benchThreadsFromEnv();

std::string benchCsv(const std::vector<BenchRow> & rows);
std::string benchTable(const std::vector<BenchRow> & rows);

}  // namespace seftpp::app

#endif  // SEFTPP_APP__BENCH_HPP_
