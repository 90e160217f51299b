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

#ifndef SEFTPP__GEOMETRY_HPP_
#define SEFTPP__GEOMETRY_HPP_

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace seftpp
{

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/**
 * @brief Base class for all errors raised by the library
 */
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct Point2
{
  double x{0.0};
  double y{0.0};

  friend bool operator==(const Point2 &, const Point2 &) = default;
};

inline Point2 operator+(Point2 a, Point2 b) {return {a.x + b.x, a.y + b.y};}
inline Point2 operator-(Point2 a, Point2 b) {return {a.x - b.x, a.y - b.y};}
inline Point2 operator*(double k, Point2 a) {return {k * a.x, k * a.y};}
inline double dot(Point2 a, Point2 b) {return a.x * b.x + a.y * b.y;}
inline double cross(Point2 a, Point2 b) {return a.x * b.y - a.y * b.x;}
inline double norm(Point2 a) {return std::hypot(a.x, a.y);}
inline double distance(Point2 a, Point2 b) {return std::hypot(a.x - b.x, a.y - b.y);}

/// Twice the signed area of triangle (a, b, c); positive when counter-clockwise.
inline double orient(Point2 a, Point2 b, Point2 c) {return cross(b - a, c - a);}

struct Pose2
{
  double x{0.0};
  double y{0.0};
  double theta{0.0};

  Point2 position() const {return {x, y};}
  friend bool operator==(const Pose2 &, const Pose2 &) = default;
};

/**
 * @brief Simple polygon with counter-clockwise vertex order
 */
struct Polygon
{
  std::vector<Point2> vertices;

  /// Validates the invariants (>= 3 vertices, simple, CCW) and throws Error otherwise.
  static Polygon fromVertices(std::vector<Point2> vertices);
};

double signedArea(const std::vector<Point2> & ring);
bool isSimpleRing(const std::vector<Point2> & ring);

/**
 * @brief Closed angular arc from lo counter-clockwise to hi
 */
struct AngleInterval
{
  double lo{0.0};
  double hi{0.0};

  /// Throws Error unless wrapTo2Pi(hi - lo) lies in (0, 2*pi).
  static AngleInterval make(double lo, double hi);
  double width() const;
  double middle() const;
};

/// Maps a finite angle to (-pi, pi]. Throws Error on non-finite input.
double wrapToPi(double a);
/// Maps a finite angle to [0, 2*pi). Throws Error on non-finite input.
double wrapTo2Pi(double a);

bool circularContains(const AngleInterval & interval, double a);

Point2 rotate(Point2 p, double theta);
Point2 transformPoint(Point2 body, const Pose2 & pose);
Point2 inverseTransformPoint(Point2 world, const Pose2 & pose);
Polygon footprintAt(const Polygon & body, const Pose2 & pose);
Polygon footprintAtInverse(const Polygon & world, const Pose2 & pose);

enum class HullKind { Point, Segment, Polygon };

struct ConvexHull
{
  HullKind kind{HullKind::Point};
  /// Point: one vertex. Segment: two endpoints. Polygon: CCW, no collinear vertices.
  std::vector<Point2> vertices;
};

/// Throws Error on empty input.
ConvexHull convexHull(std::vector<Point2> pts);

/// Closed containment test; eps widens the hull by that much along each edge normal.
bool hullContains(const ConvexHull & hull, Point2 p, double eps = 0.0);

bool segmentsIntersect(Point2 a, Point2 b, Point2 c, Point2 d);
double pointSegmentDistance(Point2 p, Point2 a, Point2 b);

/// Closed point-in-polygon test for simple polygons (boundary counts as inside).
bool pointInPolygon(const std::vector<Point2> & ring, Point2 p);

/// Closed intersection test between a simple polygon and a segment.
bool polygonIntersectsSegment(const std::vector<Point2> & ring, Point2 a, Point2 b);

/// Closed intersection test between two simple polygons.
bool polygonsIntersect(const std::vector<Point2> & a, const std::vector<Point2> & b);

/// Closed intersection test between a simple polygon and an axis-aligned box.
bool polygonIntersectsBox(
  const std::vector<Point2> & ring, double xmin, double ymin, double xmax, double ymax);

}  // namespace seftpp

#endif  // SEFTPP__GEOMETRY_HPP_
