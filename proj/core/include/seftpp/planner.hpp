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

#ifndef SEFTPP__PLANNER_HPP_
#define SEFTPP__PLANNER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "seftpp/geometry.hpp"
#include "seftpp/homotopy.hpp"
#include "seftpp/primitives.hpp"
#include "seftpp/scenario.hpp"
#include "seftpp/tether.hpp"
#include "seftpp/worldmodel.hpp"

namespace seftpp
{

/**
 * @brief Search node: configuration, h-signature and search bookkeeping
 */
struct Node
{
  std::size_t id{0};
  Config config;
  Point2 s;
  double phi{0.0};
  HWord h;
  double gCost{0.0};
  double hCost{0.0};
  std::optional<std::size_t> parent;
  double steer{0.0};
  /// +1 forward, -1 backward, 0 for the root.
  int dir{0};
  /// Index into the scenario primitive set of the move that produced this node (-1 for root).
  int primitive{-1};
};

enum class ExpansionStrategy { Normal, Improved };

std::string toString(ExpansionStrategy s);

struct PlanStats
{
  std::size_t expanded{0};
  std::size_t generated{0};
  /// Primitives whose intermediate configurations were proven valid without building them.
  std::size_t guaranteedPrimitives{0};
  /// Primitives whose intermediate configurations were built and checked one by one.
  /// Normal expansion counts every collision-free, non-selfcrossing primitive; improved
  /// expansion skips primitives already rejected at their endpoint.
  std::size_t checkedPrimitives{0};
  double wallTimeMs{0.0};
};

enum class PlanStatus { Found, NoPath, ExpansionLimit };

std::string toString(PlanStatus s);

struct PlanResult
{
  PlanStatus status{PlanStatus::NoPath};
  /// Robot poses from start to the goal node, then the goal point (heading of the last pose).
  std::vector<Pose2> path;
  /// Primitive sequence from the start pose.
  std::vector<MotionPrimitive> moves;
  PlanStats stats;
  double cost{0.0};
  HWord h;
  TetherState finalTether;

  bool found() const {return status == PlanStatus::Found;}
};

/// Thrown when the start configuration violates a validity condition.
class InvalidStartError : public Error
{
public:
  explicit InvalidStartError(const std::string & condition)
  : Error("invalid start configuration: " + condition), condition_(condition) {}

  /// One of "collision", "tla", "ns", "sef".
  const std::string & condition() const {return condition_;}

private:
  std::string condition_;
};

/**
 * @brief Visited structure: buckets of nodes with pairwise distinct h-signatures
 */
class VisitedGrid
{
public:
  explicit VisitedGrid(const SearchResolution & res)
  : res_(res) {}

  std::uint64_t key(const Pose2 & p) const;
  /// Node id stored for (bucket, h), if any.
  std::optional<std::size_t> find(std::uint64_t key, const HWord & h,
    const std::vector<Node> & nodes) const;
  /// Stores id, replacing any node with the same h in the bucket.
  void store(std::uint64_t key, std::size_t id, const std::vector<Node> & nodes);
  std::size_t size() const;
  const std::unordered_map<std::uint64_t, std::vector<std::size_t>> & buckets() const
  {
    return buckets_;
  }

private:
  SearchResolution res_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

/**
 * @class seftpp::Planner
 * @brief Best-first search over motion primitives with tether validity constraints
 */
class Planner
{
public:
  explicit Planner(Scenario scenario);

  const Scenario & scenario() const {return scenario_;}
  const WorldModel & world() const {return world_;}

  /// Root node from the start pose. Throws InvalidStartError.
  Node makeRoot() const;

  double movementCost(const Node & parent, const MotionPrimitive & m) const;

  /// Configuration after travelling `travel` along m, tether built from the parent's.
  Config generateConf(const Node & n, const MotionPrimitive & m, double travel) const;

  /// Checks every waypoint configuration.
  std::vector<Node> nodeExpansion(const Node & n, PlanStats & stats) const;
  /// Skips intermediate configurations when validity is guaranteed in closed form.
  std::vector<Node> improvedNodeExpansion(const Node & n, PlanStats & stats) const;
  std::vector<Node> expand(const Node & n, ExpansionStrategy strategy, PlanStats & stats) const;

  bool isGoalReached(const Node & n) const;
  PlanResult plan(ExpansionStrategy strategy) const;

  /// Poses of the root-to-goal chain with intermediate waypoints, then the goal point.
  std::vector<Pose2> tracePath(const std::vector<Node> & nodes, std::size_t goalId) const;

private:
  /// Anchor sweep samples shared by all primitives of one expansion.
  struct NodeSweep
  {
    std::vector<std::vector<Point2>> samples;
    bool hullClear = false;
  };

  bool footprintValid(const Pose2 & pose, const TetherState & staticTether) const;
  bool sefAndTla(const Config & cfg) const;
  bool primitiveGuaranteed(const Node & n, std::size_t index, const Config & end,
    double endPhi, std::optional<NodeSweep> & sweep) const;
  Node makeChild(const Node & n, int index, const Config & end) const;

  Scenario scenario_;
  WorldModel world_;
};

/// Convenience wrapper around Planner.
PlanResult plan(const Scenario & scenario, ExpansionStrategy strategy);

}  // namespace seftpp

#endif  // SEFTPP__PLANNER_HPP_
