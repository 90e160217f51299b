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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <vector>

#include "seftpp/planner.hpp"
#include "seftpp/scenario.hpp"
#include "seftpp/sparsity.hpp"
#include "seftpp/tether.hpp"

namespace
{

using namespace seftpp;

Scenario bundled(double resolution)
{
  Scenario s = loadScenario(std::filesystem::path(SEFTPP_DATA_DIR) / "scenarios" / "case1.json");
  s.waypointResolution = resolution;
  return s;
}

// Expands the root and its children once per iteration.
void expandFrontier(benchmark::State & state, ExpansionStrategy strategy)
{
  const Planner planner(bundled(0.1));
  const Node root = planner.makeRoot();
  PlanStats scratch;
  const std::vector<Node> frontier = planner.expand(root, strategy, scratch);
  for (auto _ : state) {
    PlanStats stats;
    std::size_t children = 0;
    for (const Node & n : frontier) {
      children += planner.expand(n, strategy, stats).size();
    }
    benchmark::DoNotOptimize(children);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(frontier.size()));
}

void BM_ExpandNormal(benchmark::State & state) {expandFrontier(state, ExpansionStrategy::Normal);}
void BM_ExpandImproved(benchmark::State & state)
{
  expandFrontier(state, ExpansionStrategy::Improved);
}
BENCHMARK(BM_ExpandNormal)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExpandImproved)->Unit(benchmark::kMicrosecond);

std::vector<SparsityContext> randomContexts(std::size_t count)
{
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pos(-10.0, 10.0);
  std::uniform_real_distribution<double> ang(-3.14, 3.14);
  const auto prims = defaultPrimitiveSet(0.2, 2.0);
  std::vector<SparsityContext> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({{pos(rng), pos(rng), ang(rng)}, {-0.6, 0.0}, {pos(rng), pos(rng)},
      prims[i % prims.size()]});
  }
  return out;
}

void BM_RelAngleMonotonic(benchmark::State & state)
{
  const auto ctx = randomContexts(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(isRelAngleMonotonic(ctx[i++ % ctx.size()]));
  }
}
BENCHMARK(BM_RelAngleMonotonic);

void BM_TetherLenMonotonic(benchmark::State & state)
{
  const auto ctx = randomContexts(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(isTetherLenMonotonic(ctx[i++ % ctx.size()]));
  }
}
BENCHMARK(BM_TetherLenMonotonic);

void BM_AdvanceTether(benchmark::State & state)
{
  const Planner planner(bundled(0.1));
  const Scenario & s = planner.scenario();
  const Point2 s0 = anchorPosition(s.startPose, s.anchorOffset);
  const TetherState t0 = initialTether(planner.world(), s.base, s0);
  const MotionPrimitive m{0.1, 1, 2.0};
  std::vector<Point2> anchors;
  for (double d = 0.0; d <= m.dis + 1e-9; d += 0.1) {
    anchors.push_back(anchorPosition(poseAt(s.startPose, m, d), s.anchorOffset));
  }
  for (auto _ : state) {
    TetherState t = t0;
    for (std::size_t k = 1; k < anchors.size(); ++k) {
      t = advanceTether(t, anchors[k - 1], anchors[k], planner.world());
    }
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(anchors.size() - 1));
}
BENCHMARK(BM_AdvanceTether);

void BM_PlanCoarse(benchmark::State & state)
{
  const Planner planner(bundled(1.0));
  const auto strategy =
    state.range(0) == 0 ? ExpansionStrategy::Normal : ExpansionStrategy::Improved;
  for (auto _ : state) {
    benchmark::DoNotOptimize(planner.plan(strategy).cost);
  }
}
BENCHMARK(BM_PlanCoarse)->Arg(0)->Arg(1)->ArgNames({"improved"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
