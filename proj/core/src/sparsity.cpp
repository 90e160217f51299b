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

#include "seftpp/sparsity.hpp"

#include <algorithm>
#include <limits>

namespace seftpp
{

namespace
{

bool isRightPivot(const MotionPrimitive & m) {return m.kappa < 0.0;}

Trend flip(Trend t, int travelSign)
{
  if (travelSign > 0 || t == Trend::None || t == Trend::Constant) {
    return t;
  }
  return t == Trend::Increasing ? Trend::Decreasing : Trend::Increasing;
}

int travelSign(const MotionPrimitive & m) {return m.dir;}

/// Argument range of the cosine term over the open parameter interval.
std::pair<double, double> cosArgument(const SparsityContext & ctx, double phi)
{
  const ParameterRange r = parameterRange(ctx.primitive);
  const double th = ctx.p0.theta;
  if (isRightPivot(ctx.primitive)) {
    return {r.lo - th - phi, r.hi - th - phi};
  }
  return {r.lo + th - phi, r.hi + th - phi};
}

}  // namespace

CosRange cosRangeOpen(double a, double b)
{
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b) || b - a >= kTwoPi + 1e-9) {
    throw Error("cosRangeOpen: invalid interval");
  }
  const double ca = std::cos(a);
  const double cb = std::cos(b);
  CosRange out{std::min(ca, cb), std::max(ca, cb)};
  const double kMax = std::floor(a / kTwoPi) + 1.0;
  if (kMax * kTwoPi < b) {
    out.max = 1.0;
  }
  const double kMin = std::floor((a - kPi) / kTwoPi) + 1.0;
  if (kMin * kTwoPi + kPi < b) {
    out.min = -1.0;
  }
  return out;
}

Coefficients sefCoefficients(const SparsityContext & ctx)
{
  const MotionPrimitive & m = ctx.primitive;
  const double R = turningRadius(m);
  const double x0 = ctx.p0.x, y0 = ctx.p0.y, th = ctx.p0.theta;
  const double dx = ctx.offset.x, dy = ctx.offset.y;
  Coefficients k;
  if (isRightPivot(m)) {
    k.A = ctx.o.x - x0 - R * std::sin(th);
    k.B = ctx.o.y - y0 + R * std::cos(th);
    k.C = k.A * dx + k.B * R + k.B * dy;
    k.D = k.A * R + k.A * dy - k.B * dx;
  } else {
    k.A = ctx.o.x - x0 + R * std::sin(th);
    k.B = ctx.o.y - y0 - R * std::cos(th);
    k.C = k.A * dx - k.B * R + k.B * dy;
    k.D = k.A * R - k.A * dy + k.B * dx;
  }
  k.phi = std::atan2(k.D, k.C);
  return k;
}

Coefficients tlaCoefficients(const SparsityContext & ctx)
{
  const MotionPrimitive & m = ctx.primitive;
  const double R = turningRadius(m);
  const double x0 = ctx.p0.x, y0 = ctx.p0.y, th = ctx.p0.theta;
  const double dx = ctx.offset.x, dy = ctx.offset.y;
  Coefficients k;
  if (isRightPivot(m)) {
    k.A = ctx.o.x - x0 - R * std::sin(th);
    k.B = ctx.o.y - y0 + R * std::cos(th);
    k.C = k.B * dx - k.A * R - k.A * dy;
    k.D = k.A * dx + k.B * R + k.B * dy;
  } else {
    k.A = ctx.o.x - x0 + R * std::sin(th);
    k.B = ctx.o.y - y0 - R * std::cos(th);
    k.C = k.A * dy - k.A * R - k.B * dx;
    k.D = k.A * dx - k.B * R + k.B * dy;
  }
  k.phi = std::atan2(k.D, k.C);
  return k;
}

ParameterRange parameterRange(const MotionPrimitive & m)
{
  const double span = parameterSpan(m);
  return m.dir > 0 ? ParameterRange{0.0, span} : ParameterRange{-span, 0.0};
}

Pose2 poseAtParameter(const SparsityContext & ctx, double t)
{
  const MotionPrimitive & m = ctx.primitive;
  const double travel = m.kappa == 0.0 ? m.dir * t : m.dir * t * turningRadius(m);
  return poseAtRaw(ctx.p0, m, travel);
}

double unwrappedRelativeAngle(const SparsityContext & ctx, double t)
{
  const Pose2 p = poseAtParameter(ctx, t);
  const Point2 s = anchorPosition(p, ctx.offset);
  return std::atan2(ctx.o.y - s.y, ctx.o.x - s.x) - p.theta;
}

double spanLength(const SparsityContext & ctx, double t)
{
  return distance(ctx.o, anchorPosition(poseAtParameter(ctx, t), ctx.offset));
}

DerivativePair analyticDerivative(const SparsityContext & ctx, double t)
{
  const MotionPrimitive & m = ctx.primitive;
  const double th = ctx.p0.theta;
  const double dx = ctx.offset.x, dy = ctx.offset.y;
  if (m.kappa == 0.0) {
    const double c = std::cos(th), s = std::sin(th);
    const double dPhi = -s * (ctx.o.x - ctx.p0.x - c * dx + s * dy) +
      c * (ctx.o.y - ctx.p0.y - s * dx - c * dy);
    const double K = (ctx.o.x - ctx.p0.x) * c + (ctx.o.y - ctx.p0.y) * s - dx;
    return {dPhi, t - K};
  }
  const Coefficients ks = sefCoefficients(ctx);
  const Coefficients kl = tlaCoefficients(ctx);
  const double ms = std::hypot(ks.C, ks.D);
  const double ml = std::hypot(kl.C, kl.D);
  const double n2 = ks.A * ks.A + ks.B * ks.B;
  if (isRightPivot(m)) {
    return {n2 - ms * std::cos(t - th - ks.phi), ml * std::cos(t - th - kl.phi)};
  }
  return {ms * std::cos(t + th - ks.phi) - n2, ml * std::cos(t + th - kl.phi)};
}

MonotonicityVerdict isRelAngleMonotonic(const SparsityContext & ctx)
{
  const MotionPrimitive & m = ctx.primitive;
  const int ts = travelSign(m);
  if (m.kappa == 0.0) {
    const double c0 = analyticDerivative(ctx, 0.0).dPhiTilde;
    const double scale = 1.0 + distance(ctx.o, ctx.p0.position()) + norm(ctx.offset);
    if (std::abs(c0) <= 1e-12 * scale) {
      const Point2 s0 = anchorPosition(ctx.p0, ctx.offset);
      const Point2 s1 = anchorPosition(poseAtRaw(ctx.p0, m, m.dis), ctx.offset);
      if (pointSegmentDistance(ctx.o, s0, s1) <= kMonotonicityMargin) {
        return {};
      }
      return {true, Trend::Constant};
    }
    return {true, flip(c0 > 0.0 ? Trend::Increasing : Trend::Decreasing, ts)};
  }
  const Coefficients k = sefCoefficients(ctx);
  const double n2 = k.A * k.A + k.B * k.B;
  const double mag = std::hypot(k.C, k.D);
  if (n2 <= 0.0) {
    return {};
  }
  Trend inT = Trend::None;
  if (mag <= 0.0) {
    inT = isRightPivot(m) ? Trend::Increasing : Trend::Decreasing;
  } else {
    const auto [a, b] = cosArgument(ctx, k.phi);
    if (b - a >= kTwoPi) {
      return {};
    }
    const CosRange cr = cosRangeOpen(a, b);
    const double ratio = n2 / mag;
    const bool above = ratio > cr.max + kMonotonicityMargin;
    const bool below = ratio < cr.min - kMonotonicityMargin;
    if (isRightPivot(m)) {
      inT = above ? Trend::Increasing : (below ? Trend::Decreasing : Trend::None);
    } else {
      inT = above ? Trend::Decreasing : (below ? Trend::Increasing : Trend::None);
    }
  }
  if (inT == Trend::None) {
    return {};
  }
  return {true, flip(inT, ts)};
}

MonotonicityVerdict isTetherLenMonotonic(const SparsityContext & ctx)
{
  const MotionPrimitive & m = ctx.primitive;
  const int ts = travelSign(m);
  const ParameterRange r = parameterRange(m);
  if (m.kappa == 0.0) {
    const double c = std::cos(ctx.p0.theta), s = std::sin(ctx.p0.theta);
    const double K = (ctx.o.x - ctx.p0.x) * c + (ctx.o.y - ctx.p0.y) * s - ctx.offset.x;
    if (K <= r.lo - kMonotonicityMargin) {
      return {true, flip(Trend::Increasing, ts)};
    }
    if (K >= r.hi + kMonotonicityMargin) {
      return {true, flip(Trend::Decreasing, ts)};
    }
    return {};
  }
  const Coefficients k = tlaCoefficients(ctx);
  const double mag = std::hypot(k.C, k.D);
  if (mag <= 0.0) {
    return {true, Trend::Constant};
  }
  const auto [a, b] = cosArgument(ctx, k.phi);
  if (b - a >= kTwoPi) {
    return {};
  }
  const CosRange cr = cosRangeOpen(a, b);
  if (cr.min > kMonotonicityMargin) {
    return {true, flip(Trend::Increasing, ts)};
  }
  if (cr.max < -kMonotonicityMargin) {
    return {true, flip(Trend::Decreasing, ts)};
  }
  return {};
}

double relAngleVariationBound(const SparsityContext & ctx)
{
  const MotionPrimitive & m = ctx.primitive;
  if (m.kappa == 0.0) {
    return kPi;
  }
  const Point2 c = pivotCenter(ctx.p0, m);
  const double rho = distance(anchorPosition(ctx.p0, ctx.offset), c);
  const double q = distance(ctx.o, c);
  const double tmax = parameterSpan(m);
  const double gap = std::abs(q - rho);
  if (gap <= kMonotonicityMargin) {
    return std::numeric_limits<double>::infinity();
  }
  double bound = tmax * q * (q + rho) / (gap * gap);
  if (q > rho) {
    bound = std::min(bound, tmax + 2.0 * std::asin(rho / q));
  }
  return bound;
}

bool sefGuaranteed(
  const SparsityContext & ctx, const AngleInterval & interval, double phiStart, double phiEnd)
{
  const MonotonicityVerdict v = isRelAngleMonotonic(ctx);
  if (!v.guaranteed) {
    return false;
  }
  const MotionPrimitive & m = ctx.primitive;
  if (m.kappa == 0.0) {
    const Point2 s0 = anchorPosition(ctx.p0, ctx.offset);
    const Point2 s1 = anchorPosition(poseAtRaw(ctx.p0, m, m.dis), ctx.offset);
    if (pointSegmentDistance(ctx.o, s0, s1) <= kMonotonicityMargin) {
      return false;
    }
  }
  if (!(relAngleVariationBound(ctx) < kTwoPi - kMonotonicityMargin)) {
    return false;
  }
  if (!circularContains(interval, phiStart) || !circularContains(interval, phiEnd)) {
    return false;
  }
  const double p0 = wrapTo2Pi(phiStart - interval.lo);
  const double p1 = wrapTo2Pi(phiEnd - interval.lo);
  switch (v.branch) {
    case Trend::Increasing: return p1 >= p0;
    case Trend::Decreasing: return p1 <= p0;
    case Trend::Constant: return true;
    case Trend::None: break;
  }
  return false;
}

bool tlaGuaranteed(const SparsityContext & ctx)
{
  return isTetherLenMonotonic(ctx).guaranteed;
}

std::vector<Point2> anchorSweepSamples(
  const Pose2 & p0, const MotionPrimitive & m, Point2 offset, double maxAngleStep)
{
  std::vector<Point2> out;
  const Point2 s0 = anchorPosition(p0, offset);
  out.push_back(s0);
  if (m.kappa == 0.0) {
    out.push_back(anchorPosition(poseAtRaw(p0, m, m.dis), offset));
    return out;
  }
  const Point2 c = pivotCenter(p0, m);
  const Point2 r0 = s0 - c;
  const double rho = norm(r0);
  if (rho <= 1e-12) {
    return out;
  }
  const double total = m.dir * m.kappa * m.dis;
  const double span = std::abs(total);
  const int n = std::max(1, static_cast<int>(std::ceil(span / maxAngleStep - 1e-9)));
  const double delta = total / n;
  const double scale = 1.0 / std::cos(0.5 * std::abs(delta));
  const Point2 half = rotate(r0, 0.5 * delta);
  const double cd = std::cos(delta);
  const double sd = std::sin(delta);
  const auto step = [&](Point2 v) { return Point2{cd * v.x - sd * v.y, sd * v.x + cd * v.y}; };
  out.reserve(static_cast<std::size_t>(2 * n + 1));
  Point2 mid = half;
  Point2 r = r0;
  for (int k = 0; k < n; ++k) {
    // Tangent lines at consecutive samples meet here; together they bound the arc.
    out.push_back(c + scale * mid);
    r = k + 1 == n ? rotate(r0, total) : step(r);
    out.push_back(c + r);
    mid = step(mid);
  }
  return out;
}

bool sweepHullClear(Point2 o, std::span<const Point2> anchorSamples, const WorldModel & world)
{
  std::vector<Point2> cloud(anchorSamples.begin(), anchorSamples.end());
  cloud.push_back(o);
  return !world.hullBlocked(convexHull(std::move(cloud)), o);
}

bool isContactSetConstant(
  const TetherState & start, const TetherState & end, std::span<const Point2> anchorSamples,
  const WorldModel & world, bool hullKnownClear)
{
  if (start.contacts != end.contacts) {
    return false;
  }
  const Point2 o = start.lastPoint();
  std::vector<Point2> cloud(anchorSamples.begin(), anchorSamples.end());
  cloud.push_back(o);
  const ConvexHull hull = convexHull(std::move(cloud));
  if (!hullKnownClear && world.hullBlocked(hull, o)) {
    return false;
  }
  if (!start.contacts.empty()) {
    const Point2 e1 = o - start.beforeLast();
    const int wrap = start.contacts.back().wrap;
    for (const auto & v : hull.vertices) {
      if (v == o) {
        continue;
      }
      const Point2 e2 = v - o;
      const double n2 = norm(e2);
      if (n2 <= kMonotonicityMargin) {
        return false;
      }
      if (wrap * cross(e1, e2) / (norm(e1) * n2) <= kMonotonicityMargin) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace seftpp
