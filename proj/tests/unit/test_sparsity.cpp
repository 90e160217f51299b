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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "seftpp/sparsity.hpp"
#include "support/generators.hpp"

namespace seftpp
{
namespace
{

using testing::Rng;

std::vector<double> travelParameters(const SparsityContext & ctx, int n)
{
  const ParameterRange r = parameterRange(ctx.primitive);
  std::vector<double> ts;
  for (int k = 0; k <= n; ++k) {
    const double u = static_cast<double>(k) / n;
    ts.push_back(ctx.primitive.dir > 0 ? r.lo + u * (r.hi - r.lo) : r.hi - u * (r.hi - r.lo));
  }
  return ts;
}

// Unwrapped relative angle along the direction of travel.
std::vector<double> phiTrace(const SparsityContext & ctx, int n)
{
  std::vector<double> out;
  for (double t : travelParameters(ctx, n)) {
    double v = unwrappedRelativeAngle(ctx, t);
    if (!out.empty()) {
      v = out.back() + wrapToPi(v - out.back());
    }
    out.push_back(v);
  }
  return out;
}

bool follows(const std::vector<double> & v, Trend trend, double tol)
{
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double d = v[i] - v[i - 1];
    if ((trend == Trend::Increasing && d < -tol) || (trend == Trend::Decreasing && d > tol) ||
      (trend == Trend::Constant && std::abs(d) > tol))
    {
      return false;
    }
  }
  return true;
}

Trend opposite(Trend t)
{
  switch (t) {
    case Trend::Increasing: return Trend::Decreasing;
    case Trend::Decreasing: return Trend::Increasing;
    default: return t;
  }
}

TEST(Sparsity, CosRangeMatchesDenseSampling)
{
  Rng rng(51);
  for (int trial = 0; trial < 2000; ++trial) {
    const double a = rng.uniform(-20.0, 20.0);
    const double b = a + rng.uniform(1e-3, kTwoPi);
    const CosRange r = cosRangeOpen(a, b);
    double lo = 2.0, hi = -2.0;
    for (int k = 0; k <= 4000; ++k) {
      const double c = std::cos(a + (b - a) * k / 4000.0);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    EXPECT_LE(r.min, lo + 1e-12);
    EXPECT_GE(r.max, hi - 1e-12);
    EXPECT_NEAR(r.min, lo, 1e-5);
    EXPECT_NEAR(r.max, hi, 1e-5);
  }
  EXPECT_THROW(cosRangeOpen(1.0, 1.0), Error);
  EXPECT_THROW(cosRangeOpen(0.0, 7.0), Error);
}

TEST(Sparsity, GuaranteedVerdictsHoldAlongTheTrace)
{
  Rng rng(52);
  for (PathType type : testing::allPathTypes()) {
    int guaranteed = 0;
    for (int trial = 0; trial < 1500; ++trial) {
      const SparsityContext ctx = testing::randomSparsityContext(rng, type);
      const MonotonicityVerdict rel = isRelAngleMonotonic(ctx);
      const MonotonicityVerdict len = isTetherLenMonotonic(ctx);
      if (rel.guaranteed) {
        ++guaranteed;
        EXPECT_TRUE(follows(phiTrace(ctx, 400), rel.branch, 1e-9)) << toString(type);
      }
      if (len.guaranteed) {
        std::vector<double> l;
        for (double t : travelParameters(ctx, 400)) {
          l.push_back(spanLength(ctx, t));
        }
        EXPECT_TRUE(follows(l, len.branch, 1e-9)) << toString(type);
        EXPECT_TRUE(tlaGuaranteed(ctx));
      }
    }
    EXPECT_GT(guaranteed, 500) << toString(type);
  }
}

TEST(Sparsity, AnalyticDerivativeMatchesFiniteDifference)
{
  Rng rng(53);
  for (PathType type : testing::allPathTypes()) {
    for (int trial = 0; trial < 500; ++trial) {
      const SparsityContext ctx = testing::randomSparsityContext(rng, type);
      const ParameterRange r = parameterRange(ctx.primitive);
      const double h = 1e-6;
      const double t = rng.uniform(r.lo + 2 * h, r.hi - 2 * h);
      const DerivativePair d = analyticDerivative(ctx, t);
      const double fdPhi = wrapToPi(unwrappedRelativeAngle(ctx, t + h) -
          unwrappedRelativeAngle(ctx, t - h)) / (2 * h);
      const double fdLen = (spanLength(ctx, t + h) - spanLength(ctx, t - h)) / (2 * h);
      if (spanLength(ctx, t) < 0.05) {
        continue;
      }
      // The analytic forms may carry a positive scale; signs and zeros must agree.
      if (std::abs(fdPhi) > 1e-4) {
        EXPECT_EQ(std::signbit(d.dPhiTilde), std::signbit(fdPhi)) << toString(type);
      }
      if (std::abs(fdLen) > 1e-4) {
        EXPECT_EQ(std::signbit(d.dLTilde), std::signbit(fdLen)) << toString(type);
      }
    }
  }
}

// Running an arc backwards from its end visits the same anchor curve in reverse.
TEST(Sparsity, ReversedArcMirrorsVerdicts)
{
  Rng rng(54);
  int compared = 0;
  for (PathType type : {PathType::FR, PathType::FL, PathType::Straight}) {
    for (int trial = 0; trial < 2000; ++trial) {
      const SparsityContext fwd = testing::randomSparsityContext(rng, type);
      if (fwd.primitive.dir < 0) {
        continue;
      }
      SparsityContext back = fwd;
      back.p0 = poseAtRaw(fwd.p0, fwd.primitive, fwd.primitive.dis);
      back.primitive = inverse(fwd.primitive);
      const MonotonicityVerdict a = isRelAngleMonotonic(fwd);
      const MonotonicityVerdict b = isRelAngleMonotonic(back);
      // Verdicts near the decision margin may legitimately differ.
      const auto ta = phiTrace(fwd, 200);
      const double spread = std::abs(ta.back() - ta.front());
      if (spread < 1e-6) {
        continue;
      }
      if (a.guaranteed && b.guaranteed) {
        ++compared;
        EXPECT_EQ(b.branch, opposite(a.branch)) << toString(type);
      }
      const MonotonicityVerdict la = isTetherLenMonotonic(fwd);
      const MonotonicityVerdict lb = isTetherLenMonotonic(back);
      if (la.guaranteed && lb.guaranteed) {
        EXPECT_EQ(lb.branch, opposite(la.branch)) << toString(type);
      }
      EXPECT_EQ(pathType(back.primitive),
        type == PathType::FR ? PathType::BR : (type == PathType::FL ? PathType::BL : PathType::Straight));
    }
  }
  EXPECT_GT(compared, 1000);
}

TEST(Sparsity, SefGuaranteeKeepsEveryAngleInside)
{
  Rng rng(55);
  int positives = 0;
  for (PathType type : testing::allPathTypes()) {
    for (int trial = 0; trial < 1500; ++trial) {
      const SparsityContext ctx = testing::randomSparsityContext(rng, type);
      const auto trace = phiTrace(ctx, 500);
      const double lo = rng.uniform(-kPi, kPi);
      const AngleInterval iv = AngleInterval::make(lo, lo + rng.uniform(0.3, 5.5));
      if (!sefGuaranteed(ctx, iv, trace.front(), trace.back())) {
        continue;
      }
      ++positives;
      for (double phi : trace) {
        const double rel = wrapTo2Pi(phi - iv.lo);
        EXPECT_TRUE(rel <= iv.width() + 1e-9 || rel >= kTwoPi - 1e-9) << toString(type);
      }
    }
  }
  EXPECT_GT(positives, 300);
}

TEST(Sparsity, AnchorSweepHullEnclosesTheCurve)
{
  Rng rng(56);
  for (PathType type : testing::allPathTypes()) {
    for (int trial = 0; trial < 300; ++trial) {
      const SparsityContext ctx = testing::randomSparsityContext(rng, type);
      const auto samples = anchorSweepSamples(ctx.p0, ctx.primitive, ctx.offset);
      const ConvexHull hull = convexHull(samples);
      for (int k = 0; k <= 200; ++k) {
        const Pose2 p = poseAtRaw(ctx.p0, ctx.primitive, ctx.primitive.dis * k / 200.0);
        EXPECT_TRUE(hullContains(hull, anchorPosition(p, ctx.offset), 1e-9)) << toString(type);
      }
    }
  }
}

TEST(Sparsity, ConstantContactClaimHoldsAlongThePrimitive)
{
  Rng rng(57);
  int claims = 0;
  for (int scene = 0; scene < 150; ++scene) {
    const GridMap map = testing::randomRectMap(rng, 25, 25, rng.integer(2, 8), 1, 5);
    const WorldModel world(map);
    const auto base = testing::randomFreeCenter(rng, map, 2);
    const auto pos = testing::randomFreeCenter(rng, map, 2);
    if (!base || !pos || distance(*base, *pos) < 2.0) {
      continue;
    }
    const Point2 offset{-0.5, 0.0};
    for (int k = 0; k < 20; ++k) {
      const Pose2 p0{pos->x, pos->y, rng.uniform(-kPi, kPi)};
      const TetherState t0 = initialTether(world, *base, anchorPosition(p0, offset));
      const MotionPrimitive m{rng.pick(std::vector<double>{0.0, 0.3, -0.3, 1.0, -1.0}),
        rng.chance(0.5) ? 1 : -1, rng.uniform(0.5, 4.0)};
      std::vector<Point2> anchors;
      bool inside = true;
      for (int i = 0; i <= 400; ++i) {
        const Point2 s = anchorPosition(poseAtRaw(p0, m, m.dis * i / 400.0), offset);
        const CellIndex c = map.cellOf(s);
        inside = inside && !map.occupied(c.x, c.y);
        anchors.push_back(s);
      }
      if (!inside) {
        continue;
      }
      std::vector<TetherState> states{t0};
      for (std::size_t i = 1; i < anchors.size(); ++i) {
        states.push_back(advanceTether(states.back(), anchors[i - 1], anchors[i], world));
      }
      const auto sweep = anchorSweepSamples(p0, m, offset);
      if (!isContactSetConstant(t0, states.back(), sweep, world)) {
        continue;
      }
      ++claims;
      for (const auto & s : states) {
        EXPECT_EQ(s.contacts, t0.contacts);
      }
      EXPECT_TRUE(isContactSetConstant(t0, states.back(), sweep, world, true));
    }
  }
  EXPECT_GT(claims, 200);
}

}  // namespace
}  // namespace seftpp
