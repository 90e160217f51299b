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

#include "seftpp/tether.hpp"

#include <algorithm>
#include <optional>

namespace seftpp
{

namespace
{

constexpr double kEps = 1e-9;

int signOf(double v) {return (v > 0.0) - (v < 0.0);}

/// Appends a contact, dropping trailing contacts the tether would pass straight through.
void pushContact(TetherState & t, Point2 k, int wrap)
{
  while (!t.contacts.empty()) {
    const Point2 p = t.beforeLast();
    const Point2 o = t.contacts.back().vertex;
    const double scale = distance(p, o) * distance(o, k);
    if (std::abs(orient(p, o, k)) <= 1e-12 * scale && dot(o - p, k - o) > 0.0) {
      t.contacts.pop_back();
    } else {
      break;
    }
  }
  t.contacts.push_back({k, wrap});
}

}  // namespace

double TetherState::staticLength() const
{
  double len = 0.0;
  Point2 prev = base;
  for (const auto & c : contacts) {
    len += distance(prev, c.vertex);
    prev = c.vertex;
  }
  return len;
}

Point2 anchorPosition(const Pose2 & pose, Point2 offset)
{
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  return {pose.x + offset.x * c - offset.y * s, pose.y + offset.x * s + offset.y * c};
}

TetherState tautenPolyline(const WorldModel & world, std::span<const Point2> polyline)
{
  if (polyline.empty()) {
    throw Error("tautenPolyline: empty polyline");
  }
  std::vector<Point2> pts;
  for (const auto & p : polyline) {
    if (pts.empty() || distance(pts.back(), p) > 1e-12) {
      pts.push_back(p);
    }
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (world.segmentBlocked(pts[i - 1], pts[i])) {
      throw Error("tautenPolyline: polyline passes through an obstacle");
    }
  }

  std::size_t guard = 0;
  const std::size_t guardLimit = 200000 + 200 * pts.size();
  std::size_t i = 1;
  while (i + 1 < pts.size()) {
    if (++guard > guardLimit) {
      throw Error("tautenPolyline: did not converge");
    }
    const Point2 a = pts[i - 1];
    const Point2 p = pts[i];
    const Point2 c = pts[i + 1];
    if (world.isSupportedCorner(a, p, c)) {
      ++i;
      continue;
    }
    const double area = orient(a, p, c);
    std::vector<Point2> inside;
    if (std::abs(area) > 1e-12 * std::max(1.0, distance(a, p) * distance(p, c))) {
      const ConvexHull tri = convexHull({a, p, c});
      const double xmin = std::min({a.x, p.x, c.x}) - kEps;
      const double xmax = std::max({a.x, p.x, c.x}) + kEps;
      const double ymin = std::min({a.y, p.y, c.y}) - kEps;
      const double ymax = std::max({a.y, p.y, c.y}) + kEps;
      world.forEachCornerInBox(xmin, ymin, xmax, ymax, [&](const Point2 & k) {
          if (distance(k, a) > kEps && distance(k, p) > kEps && distance(k, c) > kEps &&
          hullContains(tri, k, kEps))
          {
            inside.push_back(k);
          }
        });
    }
    if (inside.empty()) {
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
      if (i > 1) {
        --i;
      }
      continue;
    }
    // Replace p by the hull chain of the enclosed corners on p's side of a -> c.
    std::vector<Point2> cloud = inside;
    cloud.push_back(a);
    cloud.push_back(c);
    const ConvexHull hull = convexHull(cloud);
    std::vector<Point2> chain;
    if (hull.kind == HullKind::Polygon) {
      const auto & hv = hull.vertices;
      const auto ia = static_cast<std::size_t>(std::find(hv.begin(), hv.end(), a) - hv.begin());
      const auto ic = static_cast<std::size_t>(std::find(hv.begin(), hv.end(), c) - hv.begin());
      if (ia < hv.size() && ic < hv.size()) {
        const std::size_t n = hv.size();
        // The counter-clockwise arc from a to c lies right of a -> c.
        const bool pRight = area > 0.0;
        if (pRight) {
          for (std::size_t k = (ia + 1) % n; k != ic; k = (k + 1) % n) {
            chain.push_back(hv[k]);
          }
        } else {
          for (std::size_t k = (ia + n - 1) % n; k != ic; k = (k + n - 1) % n) {
            chain.push_back(hv[k]);
          }
        }
      }
    }
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
    pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(i), chain.begin(), chain.end());
    if (i > 1) {
      --i;
    }
  }

  TetherState out;
  out.base = pts.front();
  for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
    out.contacts.push_back({pts[k], signOf(orient(pts[k - 1], pts[k], pts[k + 1]))});
  }
  return out;
}

TetherState advanceTether(
  const TetherState & t, Point2 sFrom, Point2 sTo, const WorldModel & world,
  AdvanceCounters * counters)
{
  TetherState out = t;
  Point2 from = sFrom;

  for (int iter = 0; iter < 10000; ++iter) {
    const Point2 o = out.lastPoint();
    // The last contact unwraps once the anchor crosses the extension of its incoming edge.
    Point2 end = sTo;
    bool unwrap = false;
    if (!out.contacts.empty()) {
      const Point2 prev = out.beforeLast();
      const Point2 e1 = o - prev;
      const Point2 e2 = sTo - o;
      const double n2 = norm(e2);
      if (n2 > 1e-12 && out.contacts.back().wrap * cross(e1, e2) / (norm(e1) * n2) < -kEps) {
        unwrap = true;
        const double sf = orient(prev, o, from);
        const double st = orient(prev, o, sTo);
        const double lambda = sf != st ? std::clamp(sf / (sf - st), 0.0, 1.0) : 0.0;
        end = from + lambda * (sTo - from);
      }
    }

    const double area = orient(o, from, end);
    const double la = distance(o, from);
    const double lb = distance(o, end);
    const double lc = distance(from, end);
    std::optional<Point2> hit;
    int sweep = 0;
    std::vector<Point2> group;
    if (la > 1e-12 && lb > 1e-12 && lc > 1e-12 && std::abs(area) > 1e-15) {
      sweep = signOf(area);
      const Point2 ref = from - o;
      // Inside the swept triangle, or on its starting edge where the obstacle supports a bend.
      auto swept = [&](Point2 k) {
          if (!(sweep * orient(from, end, k) > kEps * lc && sweep * orient(end, o, k) > kEps * lb)) {
            return false;
          }
          const double side = sweep * orient(o, from, k);
          if (side > kEps * la) {
            return true;
          }
          const double along = dot(ref, k - o);
          return side > -kEps * la && along > 0.0 && along < la * la &&
                 world.isSupportedCorner(o, k, end);
        };
      struct Candidate
      {
        Point2 p;
        double angle;
        double dist;
      };
      std::optional<Candidate> best;
      std::vector<Candidate> all;
      world.forEachCornerInBox(
        std::min({o.x, from.x, end.x}), std::min({o.y, from.y, end.y}),
        std::max({o.x, from.x, end.x}), std::max({o.y, from.y, end.y}),
        [&](const Point2 & k) {
          if (distance(k, o) <= kEps || !swept(k)) {
            return;
          }
          const Point2 d = k - o;
          const Candidate cand{k, std::max(0.0, std::atan2(sweep * cross(ref, d), dot(ref, d))),
            norm(d)};
          all.push_back(cand);
          if (!best || cand.angle < best->angle - 1e-12 ||
          (std::abs(cand.angle - best->angle) <= 1e-12 && cand.dist < best->dist))
          {
            best = cand;
          }
        });
      if (best) {
        hit = best->p;
        // Corners collinear with o and the first hit are wrapped together, nearest first.
        const Point2 dir = best->p - o;
        std::vector<Candidate> line;
        for (const auto & c : all) {
          if (std::abs(cross(dir, c.p - o)) <= 1e-12 * best->dist * c.dist &&
            dot(dir, c.p - o) > 0)
          {
            line.push_back(c);
          }
        }
        std::sort(line.begin(), line.end(),
          [](const Candidate & a, const Candidate & b) {return a.dist < b.dist;});
        for (const auto & c : line) {
          group.push_back(c.p);
        }
      }
    }

    if (hit) {
      for (const auto & k : group) {
        pushContact(out, k, sweep);
        if (counters) {
          ++counters->pushes;
        }
      }
      const Point2 dir = *hit - o;
      const double denom = cross(dir, end - from);
      const double lambda = denom != 0.0 ? -cross(dir, from - o) / denom : 0.0;
      from = from + std::clamp(lambda, 0.0, 1.0) * (end - from);
      continue;
    }
    if (!unwrap) {
      break;
    }
    out.contacts.pop_back();
    if (counters) {
      ++counters->pops;
    }
    from = end;
  }
  return out;
}

TetherState advanceTetherAlong(
  const TetherState & t, std::span<const Point2> anchorPath, const WorldModel & world,
  double maxStep, AdvanceCounters * counters)
{
  TetherState cur = t;
  for (std::size_t i = 1; i < anchorPath.size(); ++i) {
    const Point2 a = anchorPath[i - 1];
    const Point2 b = anchorPath[i];
    const double len = distance(a, b);
    const int steps = std::max(1, static_cast<int>(std::ceil(len / maxStep - 1e-9)));
    Point2 prev = a;
    for (int k = 1; k <= steps; ++k) {
      const Point2 next = k == steps ? b : a + (static_cast<double>(k) / steps) * (b - a);
      cur = advanceTether(cur, prev, next, world, counters);
      prev = next;
    }
  }
  return cur;
}

double tetherLength(const TetherState & t, Point2 s)
{
  return t.staticLength() + distance(t.lastPoint(), s);
}

std::vector<Point2> tetherPolyline(const TetherState & t, Point2 s)
{
  std::vector<Point2> out{t.base};
  for (const auto & c : t.contacts) {
    out.push_back(c.vertex);
  }
  out.push_back(s);
  return out;
}

double relativeAngle(const Pose2 & pose, Point2 offset, const TetherState & t)
{
  const Point2 s = anchorPosition(pose, offset);
  const Point2 o = t.lastPoint();
  if (distance(o, s) <= 1e-12) {
    throw Error("relativeAngle: anchor coincides with the last contact");
  }
  return wrapToPi(std::atan2(o.y - s.y, o.x - s.x) - pose.theta);
}

bool isSEF(const Config & cfg, Point2 offset, const AngleInterval & interval)
{
  return circularContains(interval, relativeAngle(cfg.pose, offset, cfg.tether));
}

bool isNonSelfcrossing(const Polygon & footprint, const TetherState & t)
{
  Point2 prev = t.base;
  for (const auto & c : t.contacts) {
    if (polygonIntersectsSegment(footprint.vertices, prev, c.vertex)) {
      return false;
    }
    prev = c.vertex;
  }
  return true;
}

bool isNonSelfcrossing(std::span<const Polygon> footprintSweep, const TetherState & t)
{
  return std::all_of(footprintSweep.begin(), footprintSweep.end(),
           [&t](const Polygon & fp) {return isNonSelfcrossing(fp, t);});
}

TetherState initialTether(const WorldModel & world, Point2 base, Point2 anchor)
{
  std::vector<Point2> polyline{base};
  for (const auto & p : shortestGridPath(world.map(), base, anchor)) {
    polyline.push_back(p);
  }
  polyline.push_back(anchor);
  return tautenPolyline(world, polyline);
}

double alignedStartHeading(
  const WorldModel & world, Point2 base, Point2 position, Point2 offset,
  const AngleInterval & interval)
{
  const double target = interval.middle();
  Point2 o = initialTether(world, base, position).lastPoint();
  double best = 0.0;
  for (int round = 0; round < 3; ++round) {
    auto residual = [&](double theta) {
        const Point2 s = anchorPosition({position.x, position.y, theta}, offset);
        return wrapToPi(std::atan2(o.y - s.y, o.x - s.x) - theta - target);
      };
    constexpr int kSamples = 720;
    std::optional<double> root;
    double bestAbs = 1e300;
    for (int k = 0; k < kSamples && !root; ++k) {
      double lo = -kPi + kTwoPi * k / kSamples;
      double hi = -kPi + kTwoPi * (k + 1) / kSamples;
      double flo = residual(lo);
      const double fhi = residual(hi);
      if (std::abs(flo) < bestAbs) {
        bestAbs = std::abs(flo);
      }
      if (flo == 0.0) {
        root = lo;
        break;
      }
      if (flo * fhi > 0.0 || std::abs(flo - fhi) > kPi) {
        continue;
      }
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = residual(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      root = 0.5 * (lo + hi);
    }
    if (!root) {
      throw Error("alignedStartHeading: no heading puts the tether inside the interval");
    }
    best = wrapToPi(*root);
    const Point2 s = anchorPosition({position.x, position.y, best}, offset);
    const Point2 o2 = initialTether(world, base, s).lastPoint();
    if (o2 == o) {
      break;
    }
    o = o2;
  }
  return best;
}

}  // namespace seftpp
