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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "seftpp/planner.hpp"
#include "seftpp/validator.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace seftpp
{
namespace
{

void expectSameSearch(const PlanResult & a, const PlanResult & b)
{
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.path, b.path);
  EXPECT_EQ(a.moves, b.moves);
  EXPECT_EQ(a.cost, b.cost);
  EXPECT_EQ(a.h, b.h);
  EXPECT_EQ(a.finalTether, b.finalTether);
  EXPECT_EQ(a.stats.expanded, b.stats.expanded);
  EXPECT_EQ(a.stats.generated, b.stats.generated);
}

std::string rootFailure(const Scenario & s)
{
  try {
    (void)Planner(s).makeRoot();
  } catch (const InvalidStartError & e) {
    return e.condition();
  }
  return "";
}

TEST(Planner, FindsAValidPathOnTheFixture)
{
  const Scenario s = testing::smallScenario();
  const PlanResult r = plan(s, ExpansionStrategy::Improved);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.path.front(), s.startPose);
  EXPECT_LE(distance(r.path.back().position(), s.goal), 1e-12);
  EXPECT_LE(distance(r.path[r.path.size() - 2].position(), s.goal), s.goalTolerance + 1e-12);
  EXPECT_TRUE(validatePath(s, r, 0.01).ok());
  EXPECT_GT(r.stats.guaranteedPrimitives, 0u);
  EXPECT_EQ(toString(r.h), "r1");

  // The move list replays the node chain.
  Pose2 p = s.startPose;
  for (const auto & m : r.moves) {
    EXPECT_EQ(std::count(s.primitives.begin(), s.primitives.end(), m), 1);
    p = endpointPose(p, m);
  }
  EXPECT_LE(distance(p.position(), s.goal), s.goalTolerance + 1e-9);
}

TEST(Planner, StrategiesAgreeAndRunsAreDeterministic)
{
  const Scenario s = testing::smallScenario();
  const PlanResult a = plan(s, ExpansionStrategy::Normal);
  const PlanResult b = plan(s, ExpansionStrategy::Improved);
  const PlanResult c = plan(s, ExpansionStrategy::Improved);
  expectSameSearch(a, b);
  expectSameSearch(b, c);
  EXPECT_EQ(b.stats.guaranteedPrimitives, c.stats.guaranteedPrimitives);
  EXPECT_EQ(a.stats.guaranteedPrimitives, 0u);
}

TEST(Planner, InvalidStartConditions)
{
  Scenario s = testing::smallScenario();
  EXPECT_EQ(rootFailure(s), "");

  Scenario collision = s;
  collision.startPose = {10.5, 6.5, 0.0};
  try {
    (void)Planner(collision);
    FAIL();
  } catch (const ScenarioError & e) {
    EXPECT_EQ(e.field(), "start");
  }

  Scenario tla = s;
  tla.maxTetherLength = 1.0;
  EXPECT_EQ(rootFailure(tla), "tla");

  Scenario sef = s;
  sef.startPose.theta = wrapToPi(sef.startPose.theta + kPi);
  EXPECT_EQ(rootFailure(sef), "sef");
  EXPECT_THROW(plan(sef, ExpansionStrategy::Improved), InvalidStartError);
}

TEST(Planner, GoalInsideAnObstacleHasNoPath)
{
  Scenario s = testing::smallScenario();
  s.goal = {11.5, 7.5};
  s.maxTetherLength = 14.0;
  const PlanResult r = plan(s, ExpansionStrategy::Improved);
  EXPECT_EQ(r.status, PlanStatus::NoPath);
  EXPECT_TRUE(r.path.empty());
  EXPECT_GT(r.stats.expanded, 0u);
}

TEST(Planner, ExpansionLimitStopsTheSearch)
{
  Scenario s = testing::smallScenario();
  s.maxExpansions = 5;
  const PlanResult r = plan(s, ExpansionStrategy::Improved);
  EXPECT_EQ(r.status, PlanStatus::ExpansionLimit);
  EXPECT_EQ(r.stats.expanded, 5u);
}

TEST(Planner, ChildrenAreConsistentWithTheirParent)
{
  const Scenario s = testing::smallScenario();
  const Planner planner(s);
  std::vector<Node> frontier{planner.makeRoot()};
  int checkedChildren = 0;
  for (int depth = 0; depth < 3; ++depth) {
    std::vector<Node> next;
    for (const auto & n : frontier) {
      PlanStats normalStats, improvedStats;
      const auto kids = planner.expand(n, ExpansionStrategy::Normal, normalStats);
      const auto same = planner.expand(n, ExpansionStrategy::Improved, improvedStats);
      ASSERT_EQ(kids.size(), same.size());
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const Node & c = kids[i];
        EXPECT_EQ(c.config.pose, same[i].config.pose);
        EXPECT_EQ(c.config.tether, same[i].config.tether);
        EXPECT_EQ(c.phi, same[i].phi);
        EXPECT_EQ(c.h, same[i].h);
        const MotionPrimitive & m = s.primitives[static_cast<std::size_t>(c.primitive)];
        EXPECT_EQ(c.config.pose, endpointPose(n.config.pose, m));
        EXPECT_DOUBLE_EQ(c.gCost, planner.movementCost(n, m));
        EXPECT_DOUBLE_EQ(c.phi, relativeAngle(c.config.pose, s.anchorOffset, c.config.tether));
        EXPECT_EQ(c.s, anchorPosition(c.config.pose, s.anchorOffset));
        EXPECT_EQ(c.steer, m.kappa);
        EXPECT_EQ(c.dir, m.dir);
        EXPECT_TRUE(isSEF(c.config, s.anchorOffset, s.sefInterval));
        EXPECT_LE(tetherLength(c.config.tether, c.s), s.maxTetherLength);
        ++checkedChildren;
        next.push_back(c);
      }
      EXPECT_EQ(normalStats.guaranteedPrimitives, 0u);
      EXPECT_LE(improvedStats.checkedPrimitives, normalStats.checkedPrimitives);
    }
    frontier = next;
  }
  EXPECT_GT(checkedChildren, 20);
}

TEST(Planner, MovementCostWeights)
{
  Scenario s = testing::smallScenario();
  s.weights = {2.0, 3.0, 5.0};
  const Planner planner(s);
  Node root = planner.makeRoot();
  EXPECT_DOUBLE_EQ(planner.movementCost(root, {0.2, -1, 1.0}), 2.0);
  Node n = root;
  n.gCost = 10.0;
  n.steer = 0.2;
  n.dir = 1;
  EXPECT_DOUBLE_EQ(planner.movementCost(n, {0.2, 1, 1.0}), 12.0);
  EXPECT_DOUBLE_EQ(planner.movementCost(n, {-0.2, 1, 1.0}), 12.0 + 3.0 * 0.4);
  EXPECT_DOUBLE_EQ(planner.movementCost(n, {0.2, -1, 1.0}), 12.0 + 5.0 * 2.0);
}

TEST(Planner, VisitedGridKeepsOneNodePerSignature)
{
  std::vector<Node> nodes(4);
  nodes[0].h = {};
  nodes[1].h = HWord{{{1, 1}}};
  nodes[2].h = {};
  nodes[3].h = HWord{{{1, -1}}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i].id = i;
  }
  VisitedGrid grid(SearchResolution{1.0, 1.0, 72});
  const auto k = grid.key({3.2, 4.7, 0.01});
  EXPECT_EQ(k, grid.key({3.9, 4.1, 0.02}));
  EXPECT_NE(k, grid.key({4.1, 4.1, 0.02}));
  EXPECT_NE(k, grid.key({3.2, 4.7, 0.2}));
  EXPECT_EQ(grid.key({3.2, 4.7, 1.0}), grid.key({3.2, 4.7, 1.0 + kTwoPi}));
  grid.store(k, 0, nodes);
  grid.store(k, 1, nodes);
  EXPECT_EQ(grid.find(k, HWord{}, nodes), 0u);
  EXPECT_EQ(grid.find(k, nodes[1].h, nodes), 1u);
  EXPECT_FALSE(grid.find(k, nodes[3].h, nodes).has_value());
  grid.store(k, 2, nodes);
  EXPECT_EQ(grid.find(k, HWord{}, nodes), 2u);
  EXPECT_EQ(grid.size(), 2u);
}

TEST(Planner, RandomScenariosAgreeAcrossStrategies)
{
  testing::Rng rng(61);
  testing::RandomScenarioSpec spec;
  spec.minSize = 20;
  spec.maxSize = 40;
  spec.maxExpansions = 400;
  int made = 0;
  for (int i = 0; i < 8; ++i) {
    spec.kinematic = i % 3;
    const auto s = testing::randomScenario(rng, spec);
    if (!s) {
      continue;
    }
    ++made;
    const PlanResult a = plan(*s, ExpansionStrategy::Normal);
    const PlanResult b = plan(*s, ExpansionStrategy::Improved);
    expectSameSearch(a, b);
    if (b.found()) {
      EXPECT_TRUE(validatePath(*s, b, 0.01).ok());
    }
  }
  EXPECT_GT(made, 4);
}

}  // namespace
}  // namespace seftpp
