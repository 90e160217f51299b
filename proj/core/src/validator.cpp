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

#include "seftpp/validator.hpp"

#include <cmath>
#include <sstream>

namespace seftpp
{

Pose2 PathSegment::at(double s) const
{
  if (turnInPlace) {
    const double frac = rotation == 0.0 ? 0.0 : s / std::abs(rotation);
    return {start.x, start.y, wrapToPi(start.theta + frac * rotation)};
  }
  return poseAt(start, move, s);
}

std::vector<PathSegment> reconstructSegments(std::span<const Pose2> poses)
{
  constexpr double kFit = 1e-6;
  std::vector<PathSegment> out;
  for (std::size_t k = 1; k < poses.size(); ++k) {
    const Pose2 & p = poses[k - 1];
    const Pose2 & q = poses[k];
    const Point2 d = q.position() - p.position();
    const double chord = norm(d);
    const double dth = wrapToPi(q.theta - p.theta);
    PathSegment seg;
    seg.start = p;
    if (chord <= 1e-12) {
      if (std::abs(dth) <= 1e-12) {
        continue;
      }
      seg.turnInPlace = true;
      seg.rotation = dth;
      out.push_back(seg);
      continue;
    }
    if (std::abs(dth) <= 1e-12) {
      const Point2 h{std::cos(p.theta), std::sin(p.theta)};
      seg.move = {0.0, dot(d, h) >= 0.0 ? 1 : -1, chord};
    } else {
      const double mid = p.theta + 0.5 * dth;
      const Point2 h{std::cos(mid), std::sin(mid)};
      const int dir = dot(d, h) >= 0.0 ? 1 : -1;
      const double radius = chord / (2.0 * std::sin(0.5 * std::abs(dth)));
      const double dis = radius * std::abs(dth);
      seg.move = {dth / (dir * dis), dir, dis};
    }
    const Pose2 e = poseAt(p, seg.move, seg.move.dis);
    if (distance(e.position(), q.position()) > kFit || std::abs(wrapToPi(e.theta - q.theta)) > kFit) {
      throw Error("path poses " + std::to_string(k - 1) + " and " + std::to_string(k) +
              " are not joined by a straight or circular motion");
    }
    out.push_back(seg);
  }
  return out;
}

std::vector<PathSample> replayPath(
  const Scenario & scenario, std::span<const Pose2> robotPoses, double step)
{
  if (!(step > 0.0)) {
    throw Error("replayPath: step must be positive");
  }
  if (robotPoses.empty()) {
    throw Error("replayPath: empty path");
  }
  const WorldModel world(scenario.map);
  const Point2 offset = scenario.anchorOffset;
  auto makeSample = [&](double param, const Pose2 & pose, TetherState tether) {
      PathSample s;
      s.param = param;
      s.pose = pose;
      s.anchor = anchorPosition(pose, offset);
      s.tether = std::move(tether);
      s.tetherLength = tetherLength(s.tether, s.anchor);
      if (distance(s.tether.lastPoint(), s.anchor) > 1e-12) {
        s.phi = relativeAngle(pose, offset, s.tether);
      }
      return s;
    };
  const Pose2 start = robotPoses.front();
  std::vector<PathSample> out;
  out.push_back(makeSample(0.0, start,
      initialTether(world, scenario.base, anchorPosition(start, offset))));
  double base = 0.0;
  for (const auto & seg : reconstructSegments(robotPoses)) {
    const double len = seg.length();
    const std::vector<double> params = sampleParameters(len, step);
    for (std::size_t k = 1; k < params.size(); ++k) {
      const PathSample & prev = out.back();
      const Pose2 pose = seg.at(params[k]);
      const Point2 anchor = anchorPosition(pose, offset);
      const int sub = std::max(1, static_cast<int>(std::ceil(distance(prev.anchor, anchor) /
        kTetherUpdateStep - 1e-9)) * 2);
      TetherState tether = prev.tether;
      Point2 from = prev.anchor;
      for (int j = 1; j <= sub; ++j) {
        const double s = params[k - 1] + (params[k] - params[k - 1]) * j / sub;
        const Point2 to = j == sub ? anchor : anchorPosition(seg.at(s), offset);
        tether = advanceTether(tether, from, to, world);
        from = to;
      }
      out.push_back(makeSample(base + params[k], pose, std::move(tether)));
    }
    base += len;
  }
  return out;
}

std::string describe(const ValidationReport & r)
{
  std::ostringstream out;
  auto line = [&out](const char * name, const ConditionReport & c) {
      out << name << ": " << (c.pass ? "pass" : "FAIL");
      if (!c.pass) {
        out << " (first violation at parameter " << c.firstViolation << ")";
      }
      out << "\n";
    };
  line("collision", r.collision);
  line("tla", r.tla);
  line("ns", r.ns);
  line("sef", r.sef);
  out << "goal reached: " << (r.goalReached ? "yes" : "no") << "\n";
  out << "samples: " << r.samples << ", max tether length: " << r.maxTetherLength << "\n";
  return out.str();
}

ValidationReport validatePath(
  const Scenario & scenario, std::span<const Pose2> pathWithGoal, double step)
{
  if (pathWithGoal.size() < 2) {
    throw Error("validatePath: path needs at least the start pose and the goal point");
  }
  const auto robotPoses = pathWithGoal.first(pathWithGoal.size() - 1);
  const auto samples = replayPath(scenario, robotPoses, step);
  const WorldModel world(scenario.map,
    scenario.baseIsObstacle ? std::optional<Point2>(scenario.base) : std::nullopt);
  const AngleInterval & iv = scenario.sefInterval;
  const AngleInterval widened{iv.lo - kValidationTolerance, iv.hi + kValidationTolerance};

  ValidationReport report;
  report.samples = samples.size();
  auto fail = [](ConditionReport & c, double param) {
      if (c.pass) {
        c.pass = false;
        c.firstViolation = param;
      }
    };
  for (const auto & s : samples) {
    const Polygon fp = footprintAt(scenario.footprint, s.pose);
    if (!world.isFootprintFree(fp)) {
      fail(report.collision, s.param);
    }
    report.maxTetherLength = std::max(report.maxTetherLength, s.tetherLength);
    if (s.tetherLength > scenario.maxTetherLength + kValidationTolerance) {
      fail(report.tla, s.param);
    }
    if (!isNonSelfcrossing(fp, s.tether)) {
      fail(report.ns, s.param);
    }
    if (std::isnan(s.phi) || !circularContains(widened, s.phi)) {
      fail(report.sef, s.param);
    }
  }
  report.goalReached =
    distance(robotPoses.back().position(), scenario.goal) <= scenario.goalTolerance;
  return report;
}

ValidationReport validatePath(const Scenario & scenario, const PlanResult & result, double step)
{
  return validatePath(scenario, std::span<const Pose2>(result.path), step);
}

}  // namespace seftpp
