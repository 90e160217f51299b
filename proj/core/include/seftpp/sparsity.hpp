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

#ifndef SEFTPP__SPARSITY_HPP_
#define SEFTPP__SPARSITY_HPP_

#include <span>
#include <vector>

#include "seftpp/geometry.hpp"
#include "seftpp/primitives.hpp"
#include "seftpp/tether.hpp"
#include "seftpp/worldmodel.hpp"

namespace seftpp
{

/// Margin required on every strict inequality of the monotonicity tests.
inline constexpr double kMonotonicityMargin = 1e-9;

/**
 * @brief Start pose, anchor offset, last contact and primitive of one expansion
 * Arcs are parameterized by the central angle t: (0, t_max) forward, (-t_max, 0)
 * backward; heading is theta0 - t on a right pivot and theta0 + t on a left pivot.
 * Straight primitives use t = signed distance along the initial heading.
 */
struct SparsityContext
{
  Pose2 p0;
  Point2 offset;
  Point2 o;
  MotionPrimitive primitive;
};

enum class Trend { None, Increasing, Decreasing, Constant };

/**
 * @brief Outcome of a monotonicity test
 * branch is the direction of change along the direction of travel.
 */
struct MonotonicityVerdict
{
  bool guaranteed{false};
  Trend branch{Trend::None};
};

struct CosRange
{
  double min;
  double max;
};

/// Extrema of cos over the interval (a, b); endpoint values are used as bounds.
CosRange cosRangeOpen(double a, double b);

struct Coefficients
{
  double A{0.0};
  double B{0.0};
  double C{0.0};
  double D{0.0};
  double phi{0.0};
};

/// Coefficients of the relative-angle derivative (arc primitives only).
Coefficients sefCoefficients(const SparsityContext & ctx);
/// Coefficients of the tether-length derivative (arc primitives only).
Coefficients tlaCoefficients(const SparsityContext & ctx);

struct ParameterRange
{
  double lo;
  double hi;
};

ParameterRange parameterRange(const MotionPrimitive & m);
/// Robot pose at parameter t, heading unwrapped.
Pose2 poseAtParameter(const SparsityContext & ctx, double t);
/// Relative angle before wrapping, and tether span |o - s| (L minus the fixed part).
double unwrappedRelativeAngle(const SparsityContext & ctx, double t);
double spanLength(const SparsityContext & ctx, double t);

struct DerivativePair
{
  double dPhiTilde;
  double dLTilde;
};

/// Derivatives of the relative angle and the tether length scaled by a positive factor.
DerivativePair analyticDerivative(const SparsityContext & ctx, double t);

MonotonicityVerdict isRelAngleMonotonic(const SparsityContext & ctx);
MonotonicityVerdict isTetherLenMonotonic(const SparsityContext & ctx);

/// Upper bound on the total variation of the relative angle over the primitive.
double relAngleVariationBound(const SparsityContext & ctx);

/**
 * @brief Whether every intermediate relative angle stays in the interval
 * Requires a monotonicity guarantee, a variation below one turn, an anchor path
 * clear of o, and endpoint angles ordered consistently with the trend.
 */
bool sefGuaranteed(
  const SparsityContext & ctx, const AngleInterval & interval, double phiStart, double phiEnd);

/// Whether tether length stays within its endpoint values over the primitive.
bool tlaGuaranteed(const SparsityContext & ctx);

/**
 * @brief Points whose convex hull encloses the whole anchor curve of a primitive
 * Straight motions give the two endpoints; arcs give points on the arc every
 * maxAngleStep radians plus the intersections of consecutive tangent lines.
 */
std::vector<Point2> anchorSweepSamples(
  const Pose2 & p0, const MotionPrimitive & m, Point2 offset, double maxAngleStep = 0.1);

/// Whether the convex hull of o and the samples contains no obstacle (o itself exempt).
bool sweepHullClear(Point2 o, std::span<const Point2> anchorSamples, const WorldModel & world);

/**
 * @brief Whether the tether contacts stay the same over the whole primitive
 * True iff the start and end contact lists match, the hull of o and the anchor
 * curve is obstacle-free, and the hull stays on the wrapped side of the last bend.
 * hullKnownClear skips the obstacle test when the caller already cleared a hull
 * containing this one.
 */
bool isContactSetConstant(
  const TetherState & start, const TetherState & end, std::span<const Point2> anchorSamples,
  const WorldModel & world, bool hullKnownClear = false);

}  // namespace seftpp

#endif  // SEFTPP__SPARSITY_HPP_
