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

#include "seftpp/geometry.hpp"

#include <algorithm>
#include <utility>

namespace seftpp
{

double signedArea(const std::vector<Point2> & ring)
{
  double area = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    area += cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return 0.5 * area;
}

bool isSimpleRing(const std::vector<Point2> & ring)
{
  const std::size_t n = ring.size();
  if (n < 3) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ring[i] == ring[(i + 1) % n]) {
      return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        continue;
      }
      if (segmentsIntersect(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

Polygon Polygon::fromVertices(std::vector<Point2> vertices)
{
  for (const auto & v : vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw Error("polygon: non-finite vertex");
    }
  }
  if (vertices.size() < 3) {
    throw Error("polygon: fewer than 3 vertices");
  }
  if (!isSimpleRing(vertices)) {
    throw Error("polygon: not simple");
  }
  if (signedArea(vertices) <= 0.0) {
    throw Error("polygon: vertices are not counter-clockwise");
  }
  return Polygon{std::move(vertices)};
}

AngleInterval AngleInterval::make(double lo, double hi)
{
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error("angle interval: non-finite bound");
  }
  const double w = wrapTo2Pi(hi - lo);
  if (!(w > 0.0)) {
    throw Error("angle interval: empty or full arc");
  }
  return AngleInterval{lo, hi};
}

double AngleInterval::width() const {return wrapTo2Pi(hi - lo);}

double AngleInterval::middle() const {return wrapToPi(lo + 0.5 * width());}

double wrapToPi(double a)
{
  if (!std::isfinite(a)) {
    throw Error("wrapToPi: non-finite angle");
  }
  double r = std::remainder(a, kTwoPi);
  if (r <= -kPi) {
    r += kTwoPi;
  }
  return r;
}

double wrapTo2Pi(double a)
{
  if (!std::isfinite(a)) {
    throw Error("wrapTo2Pi: non-finite angle");
  }
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  if (r >= kTwoPi) {
    r = 0.0;
  }
  return r;
}

bool circularContains(const AngleInterval & interval, double a)
{
  return wrapTo2Pi(a - interval.lo) <= wrapTo2Pi(interval.hi - interval.lo);
}

Point2 rotate(Point2 p, double theta)
{
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

Point2 transformPoint(Point2 body, const Pose2 & pose)
{
  return rotate(body, pose.theta) + Point2{pose.x, pose.y};
}

Point2 inverseTransformPoint(Point2 world, const Pose2 & pose)
{
  return rotate(world - Point2{pose.x, pose.y}, -pose.theta);
}

Polygon footprintAt(const Polygon & body, const Pose2 & pose)
{
  Polygon out;
  out.vertices.reserve(body.vertices.size());
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  for (const auto & v : body.vertices) {
    out.vertices.push_back({pose.x + c * v.x - s * v.y, pose.y + s * v.x + c * v.y});
  }
  return out;
}

Polygon footprintAtInverse(const Polygon & world, const Pose2 & pose)
{
  Polygon out;
  out.vertices.reserve(world.vertices.size());
  for (const auto & v : world.vertices) {
    out.vertices.push_back(inverseTransformPoint(v, pose));
  }
  return out;
}

ConvexHull convexHull(std::vector<Point2> pts)
{
  if (pts.empty()) {
    throw Error("convexHull: empty point set");
  }
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) {
    return {HullKind::Point, pts};
  }
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto & p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0.0) {
      --k;
    }
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0; ) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) {
      --k;
    }
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() <= 2) {
    return {HullKind::Segment, {pts.front(), pts.back()}};
  }
  return {HullKind::Polygon, hull};
}

bool hullContains(const ConvexHull & hull, Point2 p, double eps)
{
  switch (hull.kind) {
    case HullKind::Point:
      return distance(hull.vertices[0], p) <= eps;
    case HullKind::Segment:
      return pointSegmentDistance(p, hull.vertices[0], hull.vertices[1]) <= eps;
    case HullKind::Polygon:
      break;
  }
  const auto & v = hull.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % v.size()];
    if (orient(a, b, p) < -eps * distance(a, b)) {
      return false;
    }
  }
  return true;
}

namespace
{

int sign(double v) {return (v > 0.0) - (v < 0.0);}

bool onSegment(Point2 a, Point2 b, Point2 p)
{
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segmentsIntersect(Point2 a, Point2 b, Point2 c, Point2 d)
{
  const int o1 = sign(orient(a, b, c));
  const int o2 = sign(orient(a, b, d));
  const int o3 = sign(orient(c, d, a));
  const int o4 = sign(orient(c, d, b));
  if (o1 != o2 && o3 != o4) {
    return true;
  }
  return (o1 == 0 && onSegment(a, b, c)) || (o2 == 0 && onSegment(a, b, d)) ||
         (o3 == 0 && onSegment(c, d, a)) || (o4 == 0 && onSegment(c, d, b));
}

double pointSegmentDistance(Point2 p, Point2 a, Point2 b)
{
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) {
    return distance(p, a);
  }
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

bool pointInPolygon(const std::vector<Point2> & ring, Point2 p)
{
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = ring[j];
    const Point2 b = ring[i];
    if (orient(a, b, p) == 0.0 && onSegment(a, b, p)) {
      return true;
    }
    if ((b.y > p.y) != (a.y > p.y)) {
      const double xCross = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < xCross) {
        inside = !inside;
      }
    }
  }
  return inside;
}

bool polygonIntersectsSegment(const std::vector<Point2> & ring, Point2 a, Point2 b)
{
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (segmentsIntersect(ring[i], ring[(i + 1) % n], a, b)) {
      return true;
    }
  }
  return pointInPolygon(ring, a);
}

bool polygonsIntersect(const std::vector<Point2> & a, const std::vector<Point2> & b)
{
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (segmentsIntersect(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()])) {
        return true;
      }
    }
  }
  return pointInPolygon(a, b[0]) || pointInPolygon(b, a[0]);
}

bool polygonIntersectsBox(
  const std::vector<Point2> & ring, double xmin, double ymin, double xmax, double ymax)
{
  double pxmin = ring[0].x, pxmax = ring[0].x, pymin = ring[0].y, pymax = ring[0].y;
  for (const auto & v : ring) {
    pxmin = std::min(pxmin, v.x);
    pxmax = std::max(pxmax, v.x);
    pymin = std::min(pymin, v.y);
    pymax = std::max(pymax, v.y);
  }
  if (pxmax < xmin || pxmin > xmax || pymax < ymin || pymin > ymax) {
    return false;
  }
  for (const auto & v : ring) {
    if (v.x >= xmin && v.x <= xmax && v.y >= ymin && v.y <= ymax) {
      return true;
    }
  }
  const std::vector<Point2> box{{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}};
  return polygonsIntersect(ring, box);
}

}  // namespace seftpp
