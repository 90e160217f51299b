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

#include "seftpp/primitives.hpp"

#include <limits>

namespace seftpp
{

PathType pathType(const MotionPrimitive & m)
{
  if (m.kappa == 0.0) {
    return PathType::Straight;
  }
  if (m.dir > 0) {
    return m.kappa < 0.0 ? PathType::FR : PathType::FL;
  }
  return m.kappa < 0.0 ? PathType::BR : PathType::BL;
}

std::string toString(PathType type)
{
  switch (type) {
    case PathType::Straight: return "Straight";
    case PathType::FR: return "FR";
    case PathType::FL: return "FL";
    case PathType::BR: return "BR";
    case PathType::BL: return "BL";
  }
  return "?";
}

void validatePrimitive(const MotionPrimitive & m, double kappaMax)
{
  if (!(m.dis > 0.0) || !std::isfinite(m.dis)) {
    throw Error("primitive: dis must be positive");
  }
  if (m.dir != 1 && m.dir != -1) {
    throw Error("primitive: dir must be +1 or -1");
  }
  if (!std::isfinite(m.kappa) || std::abs(m.kappa) > kappaMax) {
    throw Error("primitive: |kappa| exceeds the curvature limit");
  }
}

double turningRadius(const MotionPrimitive & m)
{
  return m.kappa == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::abs(m.kappa);
}

double parameterSpan(const MotionPrimitive & m)
{
  return m.kappa == 0.0 ? m.dis : m.dis * std::abs(m.kappa);
}

Point2 pivotCenter(const Pose2 & p0, const MotionPrimitive & m)
{
  const double inv = 1.0 / m.kappa;
  return {p0.x - inv * std::sin(p0.theta), p0.y + inv * std::cos(p0.theta)};
}

Pose2 poseAtRaw(const Pose2 & p0, const MotionPrimitive & m, double s)
{
  if (m.kappa == 0.0) {
    const double d = m.dir * s;
    return {p0.x + d * std::cos(p0.theta), p0.y + d * std::sin(p0.theta), p0.theta};
  }
  const double theta = p0.theta + m.dir * m.kappa * s;
  const double inv = 1.0 / m.kappa;
  return {p0.x + inv * (std::sin(theta) - std::sin(p0.theta)),
    p0.y - inv * (std::cos(theta) - std::cos(p0.theta)), theta};
}

Pose2 poseAt(const Pose2 & p0, const MotionPrimitive & m, double s)
{
  Pose2 p = poseAtRaw(p0, m, s);
  p.theta = wrapToPi(p.theta);
  return p;
}

Pose2 endpointPose(const Pose2 & p0, const MotionPrimitive & m)
{
  return poseAt(p0, m, m.dis);
}

std::size_t waypointCount(double dis, double step)
{
  if (!(step > 0.0)) {
    throw Error("waypoint step must be positive");
  }
  return static_cast<std::size_t>(std::ceil(dis / step - 1e-9)) + 1;
}

std::vector<double> sampleParameters(double dis, double step)
{
  const std::size_t n = waypointCount(dis, step);
  std::vector<double> out(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    out[k] = static_cast<double>(k) * step;
  }
  out[n - 1] = dis;
  return out;
}

std::vector<Pose2> samplePoses(const Pose2 & p0, const MotionPrimitive & m, double step)
{
  std::vector<Pose2> out;
  for (double s : sampleParameters(m.dis, step)) {
    out.push_back(poseAt(p0, m, s));
  }
  return out;
}

MotionPrimitive inverse(const MotionPrimitive & m)
{
  return {m.kappa, -m.dir, m.dis};
}

std::vector<MotionPrimitive> defaultPrimitiveSet(double kappaMax, double dis)
{
  std::vector<MotionPrimitive> out;
  for (int dir : {1, -1}) {
    for (double k : {0.0, kappaMax, -kappaMax}) {
      out.push_back({k, dir, dis});
    }
  }
  return out;
}

}  // namespace seftpp
