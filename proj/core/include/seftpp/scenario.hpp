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

#ifndef SEFTPP__SCENARIO_HPP_
#define SEFTPP__SCENARIO_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "seftpp/geometry.hpp"
#include "seftpp/primitives.hpp"
#include "seftpp/worldmodel.hpp"

namespace seftpp
{

struct SearchResolution
{
  double x{1.0};
  double y{1.0};
  int thetaBins{72};

  double theta() const {return kTwoPi / thetaBins;}
};

struct CostWeights
{
  double k1{1.0};
  double k2{1.0};
  double k3{1.0};
};

/**
 * @brief Everything one planning query needs
 */
struct Scenario
{
  GridMap map;
  Point2 base;
  /// Footprint collision treats the base cell as occupied.
  bool baseIsObstacle{true};
  Pose2 startPose;
  Point2 goal;
  double maxTetherLength{0.0};
  Point2 anchorOffset;
  Polygon footprint;
  AngleInterval sefInterval;
  SearchResolution resolution;
  std::vector<MotionPrimitive> primitives;
  CostWeights weights;
  double goalTolerance{0.5};
  double waypointResolution{0.1};
  /// 0 means unlimited.
  std::size_t maxExpansions{0};
};

/// Scenario file error naming the offending field.
class ScenarioError : public Error
{
public:
  ScenarioError(const std::string & field, const std::string & what)
  : Error("scenario field '" + field + "': " + what), field_(field) {}

  const std::string & field() const {return field_;}

private:
  std::string field_;
};

/**
 * @brief Parses a JSON scenario document
 * Relative map paths are resolved against baseDir. See README for the schema.
 */
Scenario parseScenario(std::string_view json, const std::filesystem::path & baseDir = {});
Scenario loadScenario(const std::filesystem::path & path);

/// Checks the scenario invariants, throwing ScenarioError.
void validateScenario(const Scenario & scenario);

/// Rectangle footprint with corners (xmin, ymin) and (xmax, ymax).
Polygon rectangleFootprint(double xmin, double ymin, double xmax, double ymax);

}  // namespace seftpp

#endif  // SEFTPP__SCENARIO_HPP_
