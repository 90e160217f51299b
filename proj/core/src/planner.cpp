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

#include "seftpp/planner.hpp"

#include <algorithm>
#include <chrono>
#include <queue>

#include "seftpp/sparsity.hpp"

namespace seftpp
{

std::string toString(ExpansionStrategy s)
{
  return s == ExpansionStrategy::Normal ? "normal" : "improved";
}

std::string toString(PlanStatus s)
{
  switch (s) {
    case PlanStatus::Found: return "found";
    case PlanStatus::NoPath: return "no_path";
    case PlanStatus::ExpansionLimit: return "expansion_limit";
  }
  return "?";
}

std::uint64_t VisitedGrid::key(const Pose2 & p) const
{
  constexpr std::int64_t kOffset = 1 << 20;
  constexpr std::uint64_t kMask = (1u << 21) - 1;
  const auto ix = static_cast<std::int64_t>(std::floor(p.x / res_.x)) + kOffset;
  const auto iy = static_cast<std::int64_t>(std::floor(p.y / res_.y)) + kOffset;
  auto it = static_cast<std::int64_t>(std::floor(wrapTo2Pi(p.theta) / res_.theta()));
  it = std::clamp<std::int64_t>(it, 0, res_.thetaBins - 1);
  return ((static_cast<std::uint64_t>(ix) & kMask) << 42) |
         ((static_cast<std::uint64_t>(iy) & kMask) << 21) |
         (static_cast<std::uint64_t>(it) & kMask);
}

std::optional<std::size_t> VisitedGrid::find(
  std::uint64_t key, const HWord & h, const std::vector<Node> & nodes) const
{
  const auto it = buckets_.find(key);
  if (it == buckets_.end()) {
    return std::nullopt;
  }
  for (const std::size_t id : it->second) {
    if (hEquals(nodes[id].h, h)) {
      return id;
    }
  }
  return std::nullopt;
}

void VisitedGrid::store(std::uint64_t key, std::size_t id, const std::vector<Node> & nodes)
{
  auto & bucket = buckets_[key];
  for (auto & stored : bucket) {
    if (hEquals(nodes[stored].h, nodes[id].h)) {
      stored = id;
      return;
    }
  }
  bucket.push_back(id);
}

std::size_t VisitedGrid::size() const
{
  std::size_t n = 0;
  for (const auto & [k, v] : buckets_) {
    n += v.size();
  }
  return n;
}

Planner::Planner(Scenario scenario)
: scenario_(std::move(scenario)),
  world_(scenario_.map, scenario_.baseIsObstacle ? std::optional<Point2>(scenario_.base) :
    std::nullopt)
{
  validateScenario(scenario_);
}

Node Planner::makeRoot() const
{
  const Scenario & sc = scenario_;
  Node root;
  root.config.pose = sc.startPose;
  root.s = anchorPosition(sc.startPose, sc.anchorOffset);
  const Polygon fp = footprintAt(sc.footprint, sc.startPose);
  if (!world_.isFootprintFree(fp)) {
    throw InvalidStartError("collision");
  }
  try {
    root.config.tether = initialTether(world_, sc.base, root.s);
  } catch (const NoPathError &) {
    throw InvalidStartError("tla");
  } catch (const Error &) {
    throw InvalidStartError("collision");
  }
  if (tetherLength(root.config.tether, root.s) > sc.maxTetherLength) {
    throw InvalidStartError("tla");
  }
  if (!isNonSelfcrossing(fp, root.config.tether)) {
    throw InvalidStartError("ns");
  }
  try {
    root.phi = relativeAngle(sc.startPose, sc.anchorOffset, root.config.tether);
  } catch (const Error &) {
    throw InvalidStartError("sef");
  }
  if (!circularContains(sc.sefInterval, root.phi)) {
    throw InvalidStartError("sef");
  }
  root.hCost = distance(sc.startPose.position(), sc.goal);
  return root;
}

double Planner::movementCost(const Node & parent, const MotionPrimitive & m) const
{
  const CostWeights & w = scenario_.weights;
  double cost = parent.gCost + w.k1 * m.dis;
  if (parent.dir != 0) {
    cost += w.k2 * std::abs(m.kappa - parent.steer) + w.k3 * std::abs(m.dir - parent.dir);
  }
  return cost;
}

Config Planner::generateConf(const Node & n, const MotionPrimitive & m, double travel) const
{
  double anchorLength = travel;
  if (m.kappa != 0.0) {
    anchorLength = distance(n.s, pivotCenter(n.config.pose, m)) * std::abs(m.kappa) * travel;
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(anchorLength / kTetherUpdateStep -
    1e-9)));
  TetherState tether = n.config.tether;
  Point2 prev = n.s;
  for (int j = 1; j <= steps; ++j) {
    const double s = j == steps ? travel : travel * j / steps;
    const Point2 next = anchorPosition(poseAtRaw(n.config.pose, m, s), scenario_.anchorOffset);
    tether = advanceTether(tether, prev, next, world_);
    prev = next;
  }
  return {poseAt(n.config.pose, m, travel), std::move(tether)};
}

bool Planner::footprintValid(const Pose2 & pose, const TetherState & staticTether) const
{
  const Polygon fp = footprintAt(scenario_.footprint, pose);
  return world_.isFootprintFree(fp) && isNonSelfcrossing(fp, staticTether);
}

bool Planner::sefAndTla(const Config & cfg) const
{
  const Point2 s = anchorPosition(cfg.pose, scenario_.anchorOffset);
  if (tetherLength(cfg.tether, s) > scenario_.maxTetherLength) {
    return false;
  }
  if (distance(cfg.tether.lastPoint(), s) <= 1e-12) {
    return false;
  }
  return isSEF(cfg, scenario_.anchorOffset, scenario_.sefInterval);
}

bool Planner::primitiveGuaranteed(
  const Node & n, std::size_t index, const Config & end, double endPhi,
  std::optional<NodeSweep> & sweep) const
{
  const MotionPrimitive & m = scenario_.primitives[index];
  const SparsityContext ctx{n.config.pose, scenario_.anchorOffset, n.config.tether.lastPoint(), m};
  if (!tlaGuaranteed(ctx) || !sefGuaranteed(ctx, scenario_.sefInterval, n.phi, endPhi)) {
    return false;
  }
  if (!sweep) {
    // One hull around every primitive's sweep; when clear, each smaller hull is too.
    NodeSweep s;
    std::vector<Point2> all;
    for (const auto & p : scenario_.primitives) {
      s.samples.push_back(anchorSweepSamples(n.config.pose, p, scenario_.anchorOffset));
      all.insert(all.end(), s.samples.back().begin(), s.samples.back().end());
    }
    s.hullClear = sweepHullClear(n.config.tether.lastPoint(), all, world_);
    sweep = std::move(s);
  }
  return isContactSetConstant(
    n.config.tether, end.tether, sweep->samples[index], world_, sweep->hullClear);
}

Node Planner::makeChild(const Node & n, int index, const Config & end) const
{
  const MotionPrimitive & m = scenario_.primitives[static_cast<std::size_t>(index)];
  Node child;
  child.config = end;
  child.s = anchorPosition(end.pose, scenario_.anchorOffset);
  child.phi = relativeAngle(end.pose, scenario_.anchorOffset, end.tether);
  // The center stays within dis of its start, so distant rays cannot be crossed.
  const Point2 c0 = n.config.pose.position();
  const bool nearRay = std::any_of(world_.rays().begin(), world_.rays().end(),
      [&](const Ray & r) {
        return std::abs(r.origin.x - c0.x) <= m.dis + 1e-9 && c0.y + m.dis + 1e-9 >= r.origin.y;
      });
  child.h = n.h;
  if (nearRay) {
    std::vector<Point2> centers;
    for (const auto & p : samplePoses(n.config.pose, m, kTetherUpdateStep)) {
      centers.push_back(p.position());
    }
    child.h = appendReduce(n.h, polylineCrossings(centers, world_.rays()));
  }
  child.gCost = movementCost(n, m);
  child.hCost = distance(end.pose.position(), scenario_.goal);
  child.parent = n.id;
  child.steer = m.kappa;
  child.dir = m.dir;
  child.primitive = index;
  return child;
}

std::vector<Node> Planner::expand(
  const Node & n, ExpansionStrategy strategy, PlanStats & stats) const
{
  std::vector<Node> children;
  std::optional<NodeSweep> sweep;
  const auto & prims = scenario_.primitives;
  for (std::size_t idx = 0; idx < prims.size(); ++idx) {
    const MotionPrimitive & m = prims[idx];
    const std::vector<double> params = sampleParameters(m.dis, scenario_.waypointResolution);
    const std::size_t nw = params.size();
    bool ok = true;
    for (std::size_t k = 1; k < nw && ok; ++k) {
      ok = footprintValid(poseAt(n.config.pose, m, params[k]), n.config.tether);
    }
    if (!ok) {
      continue;
    }
    Config end;
    if (strategy == ExpansionStrategy::Normal) {
      ++stats.checkedPrimitives;
      for (std::size_t k = 1; k < nw && ok; ++k) {
        Config cfg = generateConf(n, m, params[k]);
        ok = sefAndTla(cfg);
        if (k + 1 == nw) {
          end = std::move(cfg);
        }
      }
    } else {
      end = generateConf(n, m, m.dis);
      if (!sefAndTla(end)) {
        continue;
      }
      if (nw > 2 && primitiveGuaranteed(n, idx, end,
        relativeAngle(end.pose, scenario_.anchorOffset, end.tether), sweep))
      {
        ++stats.guaranteedPrimitives;
      } else {
        ++stats.checkedPrimitives;
        for (std::size_t k = 1; k + 1 < nw && ok; ++k) {
          ok = sefAndTla(generateConf(n, m, params[k]));
        }
      }
    }
    if (ok) {
      children.push_back(makeChild(n, static_cast<int>(idx), end));
    }
  }
  return children;
}

std::vector<Node> Planner::nodeExpansion(const Node & n, PlanStats & stats) const
{
  return expand(n, ExpansionStrategy::Normal, stats);
}

std::vector<Node> Planner::improvedNodeExpansion(const Node & n, PlanStats & stats) const
{
  return expand(n, ExpansionStrategy::Improved, stats);
}

bool Planner::isGoalReached(const Node & n) const
{
  return distance(n.config.pose.position(), scenario_.goal) <= scenario_.goalTolerance;
}

PlanResult Planner::plan(ExpansionStrategy strategy) const
{
  const auto t0 = std::chrono::steady_clock::now();
  PlanResult result;
  std::vector<Node> nodes;
  std::vector<char> removed;
  nodes.push_back(makeRoot());
  removed.push_back(0);
  VisitedGrid visited(scenario_.resolution);
  visited.store(visited.key(nodes[0].config.pose), 0, nodes);

  struct Entry
  {
    double f;
    std::size_t id;
    bool operator>(const Entry & o) const {return f > o.f || (f == o.f && id > o.id);}
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  open.push({nodes[0].gCost + nodes[0].hCost, 0});

  std::optional<std::size_t> goalId;
  result.status = PlanStatus::NoPath;
  while (!open.empty()) {
    const Entry e = open.top();
    open.pop();
    if (removed[e.id]) {
      continue;
    }
    if (isGoalReached(nodes[e.id])) {
      goalId = e.id;
      result.status = PlanStatus::Found;
      break;
    }
    if (scenario_.maxExpansions != 0 && result.stats.expanded >= scenario_.maxExpansions) {
      result.status = PlanStatus::ExpansionLimit;
      break;
    }
    ++result.stats.expanded;
    const Node current = nodes[e.id];
    auto children = expand(current, strategy, result.stats);
    for (auto & child : children) {
      ++result.stats.generated;
      const std::uint64_t key = visited.key(child.config.pose);
      const auto existing = visited.find(key, child.h, nodes);
      if (existing && !(child.gCost < nodes[*existing].gCost)) {
        continue;
      }
      child.id = nodes.size();
      const double f = child.gCost + child.hCost;
      nodes.push_back(std::move(child));
      removed.push_back(0);
      if (existing) {
        removed[*existing] = 1;
      }
      visited.store(key, nodes.back().id, nodes);
      open.push({f, nodes.back().id});
    }
  }

  if (goalId) {
    const Node & g = nodes[*goalId];
    result.path = tracePath(nodes, *goalId);
    result.cost = g.gCost;
    result.h = g.h;
    result.finalTether = g.config.tether;
    std::vector<MotionPrimitive> moves;
    for (std::optional<std::size_t> id = *goalId; id && nodes[*id].parent; id = nodes[*id].parent) {
      moves.push_back(scenario_.primitives[static_cast<std::size_t>(nodes[*id].primitive)]);
    }
    std::reverse(moves.begin(), moves.end());
    result.moves = std::move(moves);
  }
  result.stats.wallTimeMs =
    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::vector<Pose2> Planner::tracePath(const std::vector<Node> & nodes, std::size_t goalId) const
{
  std::vector<std::size_t> chain;
  std::optional<std::size_t> id = goalId;
  while (id) {
    if (*id >= nodes.size() || chain.size() > nodes.size()) {
      throw Error("tracePath: broken parent chain");
    }
    chain.push_back(*id);
    id = nodes[*id].parent;
  }
  std::reverse(chain.begin(), chain.end());
  if (nodes[chain.front()].primitive != -1) {
    throw Error("tracePath: chain does not start at the root");
  }
  std::vector<Pose2> out{nodes[chain.front()].config.pose};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const Node & node = nodes[chain[k]];
    const Node & parent = nodes[chain[k - 1]];
    if (node.primitive < 0 ||
      static_cast<std::size_t>(node.primitive) >= scenario_.primitives.size())
    {
      throw Error("tracePath: node without a primitive");
    }
    const auto poses = samplePoses(parent.config.pose,
        scenario_.primitives[static_cast<std::size_t>(node.primitive)],
        scenario_.waypointResolution);
    out.insert(out.end(), poses.begin() + 1, poses.end());
  }
  out.push_back({scenario_.goal.x, scenario_.goal.y, out.back().theta});
  return out;
}

PlanResult plan(const Scenario & scenario, ExpansionStrategy strategy)
{
  return Planner(scenario).plan(strategy);
}

}  // namespace seftpp
