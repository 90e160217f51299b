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

#include <fstream>
#include <string>

#include "seftpp/scenario.hpp"
#include "support/fixtures.hpp"

namespace seftpp
{
namespace
{

using nlohmann::json;

std::string errorField(const json & doc)
{
  try {
    (void)parseScenario(doc.dump());
  } catch (const ScenarioError & e) {
    return e.field();
  }
  return "<none>";
}

TEST(Scenario, ParsesTheSmallFixture)
{
  const Scenario s = testing::smallScenario();
  EXPECT_EQ(s.map.width, 24);
  EXPECT_EQ(s.map.height, 16);
  EXPECT_TRUE(s.map.occupied(10, 5));
  EXPECT_FALSE(s.map.occupied(9, 5));
  EXPECT_EQ(s.base, (Point2{3.5, 8.5}));
  EXPECT_EQ(s.primitives.size(), 6u);
  EXPECT_DOUBLE_EQ(s.sefInterval.lo, 2.36);
  EXPECT_EQ(s.resolution.thetaBins, 72);
  EXPECT_EQ(s.maxExpansions, 0u);
  EXPECT_TRUE(s.baseIsObstacle);
  EXPECT_TRUE(circularContains(s.sefInterval, s.sefInterval.middle()));
}

TEST(Scenario, ErrorsNameTheOffendingField)
{
  auto with = [](const char * key, json value) {
      json d = testing::smallScenarioDocument();
      d[key] = std::move(value);
      return d;
    };
  auto without = [](const char * key) {
      json d = testing::smallScenarioDocument();
      d.erase(key);
      return d;
    };
  EXPECT_EQ(errorField(without("base")), "base");
  EXPECT_EQ(errorField(without("goal")), "goal");
  EXPECT_EQ(errorField(without("primitives")), "primitives");
  EXPECT_EQ(errorField(with("base", json::array({50.0, 5.0}))), "base");
  EXPECT_EQ(errorField(with("base", json::array({11.5, 6.5}))), "base");
  EXPECT_EQ(errorField(with("goal", json::array({-3.0, 5.0}))), "goal");
  EXPECT_EQ(errorField(with("max_tether_length", -1.0)), "max_tether_length");
  EXPECT_EQ(errorField(with("sef_interval", json::array({1.0, 1.0}))), "sef_interval");
  EXPECT_EQ(errorField(with("footprint", json::array({json::array({0, 0}), json::array({0, 1}),
    json::array({1, 0})}))), "footprint");
  EXPECT_EQ(errorField(with("cost_weights", json::array({1.0, 1.0}))), "cost_weights");
  EXPECT_EQ(errorField(with("cost_weights", json::array({0.0, 1.0, 1.0}))), "cost_weights");
  EXPECT_EQ(errorField(with("cost_weights", json::array({1.0, -1.0, 1.0}))), "cost_weights");
  EXPECT_EQ(errorField(with("waypoint_resolution", 0.0)), "waypoint_resolution");
  EXPECT_EQ(errorField(with("max_expansions", -4)), "max_expansions");
  EXPECT_EQ(errorField(with("start", json{{"x", 11.5}, {"y", 7.5}, {"theta", 0.0}})), "start");
  EXPECT_EQ(errorField(with("start", json{{"x", 6.5}, {"y", 8.5}, {"theta", "up"}})), "start.theta");
  EXPECT_EQ(errorField(with("primitives", json{{"length", 0.0}, {"max_curvature", 0.2}})),
    "primitives.length");
  EXPECT_EQ(errorField(with("primitives", json{{"length", 1.0}, {"max_curvature", -1.0}})),
    "primitives.max_curvature");
  EXPECT_EQ(errorField(with("primitives", json{{"max_curvature", 0.2},
    {"list", json::array({json{{"kappa", 0.5}, {"dir", 1}, {"dis", 1.0}}})}})), "primitives.list");
  EXPECT_EQ(errorField(with("map", json{{"rows", json::array({"..", ".x"})}})), "map");
  EXPECT_EQ(errorField(with("map", json{{"file", "x.txt"}, {"format", "png"}})), "map.format");
  EXPECT_EQ(errorField(with("search_resolution", json{{"theta_bins", 0}})),
    "search_resolution.theta_bins");
  try {
    (void)parseScenario("{ not json");
    FAIL();
  } catch (const ScenarioError & e) {
    EXPECT_EQ(e.field(), "<document>");
  }
}

TEST(Scenario, OptionalFields)
{
  json d = testing::smallScenarioDocument();
  d["start"]["theta"] = 7.0;
  d["max_expansions"] = 123;
  d["base_is_obstacle"] = false;
  d["primitives"] = json{{"max_curvature", 0.5},
    {"list", json::array({json{{"kappa", 0.5}, {"dir", -1}, {"dis", 2.0}}})}};
  d["sef_interval"] = json::array({5.5, 0.5});
  d.erase("goal_tolerance");
  try {
    const Scenario s = parseScenario(d.dump());
    EXPECT_NEAR(s.startPose.theta, 7.0 - kTwoPi, 1e-12);
    EXPECT_EQ(s.maxExpansions, 123u);
    EXPECT_FALSE(s.baseIsObstacle);
    ASSERT_EQ(s.primitives.size(), 1u);
    EXPECT_EQ(s.primitives[0], (MotionPrimitive{0.5, -1, 2.0}));
    EXPECT_DOUBLE_EQ(s.goalTolerance, 0.5);
  } catch (const ScenarioError & e) {
    // A heading of 7 rad may fail the interval check; only the field matters here.
    EXPECT_EQ(e.field(), "start");
  }
}

TEST(Scenario, MapFilesResolveAgainstTheScenarioDirectory)
{
  const auto dir = testing::scratchDir("scenario_files");
  std::filesystem::create_directories(dir / "maps");
  {
    std::ofstream map(dir / "maps" / "m.pgm");
    map << "P2\n24 16\n255\n";
    for (int row = 0; row < 16; ++row) {
      const int y = 15 - row;
      for (int x = 0; x < 24; ++x) {
        map << ((x >= 10 && x <= 13 && y >= 5 && y <= 10) ? 0 : 255) << ' ';
      }
      map << '\n';
    }
  }
  json d = testing::smallScenarioDocument();
  d["map"] = json{{"file", "maps/m.pgm"}, {"format", "pgm"}};
  {
    std::ofstream f(dir / "s.json");
    f << d.dump(2);
  }
  const Scenario fromFile = loadScenario(dir / "s.json");
  EXPECT_EQ(fromFile.map.cells, testing::smallScenario().map.cells);
  EXPECT_THROW(loadScenario(dir / "missing.json"), ScenarioError);
}

TEST(Scenario, BundledScenariosLoad)
{
  for (const char * name : {"case1.json", "case2.json", "case3.json"}) {
    const Scenario s = loadScenario(testing::dataDir() / "scenarios" / name);
    EXPECT_EQ(s.map.width, 100) << name;
    EXPECT_EQ(s.map.height, 100) << name;
    EXPECT_NO_THROW(validateScenario(s));
  }
}

}  // namespace
}  // namespace seftpp
