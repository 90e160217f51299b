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

#ifndef SEFTPP__VALIDATOR_HPP_
#define SEFTPP__VALIDATOR_HPP_

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "seftpp/planner.hpp"
#include "seftpp/scenario.hpp"
#include "seftpp/tether.hpp"

namespace seftpp
{

/// Slack allowed on the tether length and relative angle checks.
inline constexpr double kValidationTolerance = 1e-9;

/**
 * @brief One motion between consecutive path poses
 * Arcs and straight segments follow MotionPrimitive; turnInPlace rotates by
 * `rotation` radians without translating.
 */
struct PathSegment
{
  Pose2 start;
  MotionPrimitive move;
  bool turnInPlace{false};
  double rotation{0.0};

  double length() const {return turnInPlace ? std::abs(rotation) : move.dis;}
  Pose2 at(double s) const;
};

/// Fits a motion between each pair of consecutive poses. Throws Error for infeasible pairs.
std::vector<PathSegment> reconstructSegments(std::span<const Pose2> poses);

struct PathSample
{
  /// Cumulative motion parameter (arc length, or radians while turning in place).
  double param{0.0};
  Pose2 pose;
  Point2 anchor;
  TetherState tether;
  double tetherLength{0.0};
  /// NaN when the anchor coincides with the last contact.
  double phi{std::numeric_limits<double>::quiet_NaN()};
};

/// Re-simulates the tether along robot poses at the given parameter step.
std::vector<PathSample> replayPath(
  const Scenario & scenario, std::span<const Pose2> robotPoses, double step);

struct ConditionReport
{
  bool pass{true};
  /// Parameter of the first violating sample (NaN when passing).
  double firstViolation{std::numeric_limits<double>::quiet_NaN()};
};

struct ValidationReport
{
  ConditionReport collision;
  ConditionReport tla;
  ConditionReport ns;
  ConditionReport sef;
  bool goalReached{false};
  std::size_t samples{0};
  double maxTetherLength{0.0};

  bool ok() const {return collision.pass && tla.pass && ns.pass && sef.pass;}
};

std::string describe(const ValidationReport & report);

/**
 * @brief Checks collision, TLA, NS and SEF densely along a path
 * pathWithGoal holds robot poses followed by the goal point, as produced by plan().
 */
ValidationReport validatePath(
  const Scenario & scenario, std::span<const Pose2> pathWithGoal, double step);
ValidationReport validatePath(const Scenario & scenario, const PlanResult & result, double step);

}  // namespace seftpp

#endif  // SEFTPP__VALIDATOR_HPP_
