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

#ifndef SEFTPP__TETHER_HPP_
#define SEFTPP__TETHER_HPP_

#include <span>
#include <vector>

#include "seftpp/geometry.hpp"
#include "seftpp/worldmodel.hpp"

namespace seftpp
{

/// Default upper bound on anchor displacement per tether update.
inline constexpr double kTetherUpdateStep = 0.1;

/**
 * @brief Obstacle corner the tether bends around
 * wrap is +1 when the tether turns counter-clockwise at the corner, -1 otherwise.
 */
struct Contact
{
  Point2 vertex;
  int wrap{1};

  friend bool operator==(const Contact &, const Contact &) = default;
};

struct TetherState
{
  Point2 base;
  std::vector<Contact> contacts;

  /// Last contact o, or the base when there are no contacts.
  Point2 lastPoint() const {return contacts.empty() ? base : contacts.back().vertex;}
  /// Point before the last contact (the base for a single contact).
  Point2 beforeLast() const
  {
    return contacts.size() >= 2 ? contacts[contacts.size() - 2].vertex : base;
  }
  /// Length of the fixed part b -> ... -> o.
  double staticLength() const;

  friend bool operator==(const TetherState &, const TetherState &) = default;
};

struct Config
{
  Pose2 pose;
  TetherState tether;
};

struct AdvanceCounters
{
  int pushes{0};
  int pops{0};
};

Point2 anchorPosition(const Pose2 & pose, Point2 offset);

/**
 * @brief Locally taut tether homotopic to a polyline starting at the base
 * Throws Error if a polyline segment passes through an obstacle interior.
 */
TetherState tautenPolyline(const WorldModel & world, std::span<const Point2> polyline);

/**
 * @brief Updates the contact chain for one small anchor move sFrom -> sTo
 * Sweeps the final span towards sTo, pushing convex corners in sweep-angle order and
 * popping the last contact where the anchor crosses the extension of its incoming edge.
 * Contacts the tether would pass straight through are not kept.
 */
TetherState advanceTether(
  const TetherState & t, Point2 sFrom, Point2 sTo, const WorldModel & world,
  AdvanceCounters * counters = nullptr);

/// Advances along an anchor polyline, subdividing so each update moves at most maxStep.
TetherState advanceTetherAlong(
  const TetherState & t, std::span<const Point2> anchorPath, const WorldModel & world,
  double maxStep = kTetherUpdateStep, AdvanceCounters * counters = nullptr);

double tetherLength(const TetherState & t, Point2 s);

/// Polyline b, contacts..., s.
std::vector<Point2> tetherPolyline(const TetherState & t, Point2 s);

/// Relative angle between the tether retraction direction and the heading. Throws if o == s.
double relativeAngle(const Pose2 & pose, Point2 offset, const TetherState & t);

bool isSEF(const Config & cfg, Point2 offset, const AngleInterval & interval);

/// True when no polygon intersects the static part b -> ... -> o of the tether.
bool isNonSelfcrossing(std::span<const Polygon> footprintSweep, const TetherState & t);
bool isNonSelfcrossing(const Polygon & footprint, const TetherState & t);

/// Taut tether from the base to an anchor point via a shortened grid path.
TetherState initialTether(const WorldModel & world, Point2 base, Point2 anchor);

/**
 * @brief Heading at which the relative angle equals the middle of the interval
 * Throws Error if no such heading exists.
 */
double alignedStartHeading(
  const WorldModel & world, Point2 base, Point2 position, Point2 offset,
  const AngleInterval & interval);

}  // namespace seftpp

#endif  // SEFTPP__TETHER_HPP_
