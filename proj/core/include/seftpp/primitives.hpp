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

#ifndef SEFTPP__PRIMITIVES_HPP_
#define SEFTPP__PRIMITIVES_HPP_

#include <string>
#include <vector>

#include "seftpp/geometry.hpp"

namespace seftpp
{

/**
 * @brief Straight segment (kappa = 0) or constant-curvature arc
 * Kinematics: x' = dir cos(theta), y' = dir sin(theta), theta' = dir kappa, per unit arc length.
 */
struct MotionPrimitive
{
  double kappa{0.0};
  int dir{1};
  double dis{1.0};

  friend bool operator==(const MotionPrimitive &, const MotionPrimitive &) = default;
};

enum class PathType { Straight, FR, FL, BR, BL };

PathType pathType(const MotionPrimitive & m);
std::string toString(PathType type);

/// Throws Error when dis <= 0, dir is not +-1, or |kappa| > kappaMax.
void validatePrimitive(const MotionPrimitive & m, double kappaMax);

/// Turning radius 1/|kappa| (infinite for straight primitives).
double turningRadius(const MotionPrimitive & m);
/// Central angle dis*|kappa| for arcs, dis for straight primitives.
double parameterSpan(const MotionPrimitive & m);
/// Pivot center of an arc primitive started at p0.
Point2 pivotCenter(const Pose2 & p0, const MotionPrimitive & m);

/// Pose after travelling arc length s in [0, dis]; heading is left unwrapped.
Pose2 poseAtRaw(const Pose2 & p0, const MotionPrimitive & m, double s);
/// Pose after travelling arc length s; heading wrapped to (-pi, pi].
Pose2 poseAt(const Pose2 & p0, const MotionPrimitive & m, double s);
Pose2 endpointPose(const Pose2 & p0, const MotionPrimitive & m);

/// Number of waypoints: ceil(dis/step) + 1, endpoint included.
std::size_t waypointCount(double dis, double step);
/// Arc-length parameters 0, step, 2 step, ..., dis.
std::vector<double> sampleParameters(double dis, double step);
std::vector<Pose2> samplePoses(const Pose2 & p0, const MotionPrimitive & m, double step);

/// Same curve traversed in the opposite direction.
MotionPrimitive inverse(const MotionPrimitive & m);

/// kappa in {-kappaMax, 0, +kappaMax} x dir in {+1, -1}.
std::vector<MotionPrimitive> defaultPrimitiveSet(double kappaMax, double dis);

}  // namespace seftpp

#endif  // SEFTPP__PRIMITIVES_HPP_
