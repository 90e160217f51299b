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


#ifndef SEFTPP_TESTS__FIXTURES_HPP_
#define SEFTPP_TESTS__FIXTURES_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "seftpp/scenario.hpp"
#include "support/printers.hpp"

namespace seftpp::testing
{

/// 24 x 16 map with one block between start and goal.
inline nlohmann::json smallScenarioDocument()
{
  nlohmann::json rows = nlohmann::json::array();
  for (int y = 0; y < 16; ++y) {
    std::string row;
    for (int x = 0; x < 24; ++x) {
      row += (x >= 10 && x <= 13 && y >= 5 && y <= 10) ? '#' : '.';
    }
    rows.push_back(row);
  }
  return {
    {"map", {{"rows", rows}, {"resolution", 1.0}}},
    {"base", {3.5, 8.5}},
    {"start", {{"x", 6.5}, {"y", 8.5}, {"theta", "align"}}},
    {"goal", {19.5, 8.5}},
    {"max_tether_length", 40.0},
    {"anchor_offset", {-0.6, 0.0}},
    {"footprint", {{-0.6, -0.4}, {0.6, -0.4}, {0.6, 0.4}, {-0.6, 0.4}}},
    {"sef_interval", {2.36, 3.93}},
    {"primitives", {{"length", 1.0}, {"max_curvature", 0.2}}},
    {"cost_weights", {1.0, 1.0, 1.0}},
    {"goal_tolerance", 0.5},
    {"waypoint_resolution", 0.1},
  };
}

inline Scenario smallScenario()
{
  return parseScenario(smallScenarioDocument().dump());
}

inline std::filesystem::path dataDir()
{
  return SEFTPP_DATA_DIR;
}

/// Fresh scratch directory under the system temp directory.
inline std::filesystem::path scratchDir(const std::string & name)
{
  const auto dir = std::filesystem::temp_directory_path() / ("seftpp_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace seftpp::testing

#endif  // SEFTPP_TESTS__FIXTURES_HPP_
