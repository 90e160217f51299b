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

#include "seftpp/scenario.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "seftpp/tether.hpp"

namespace seftpp
{

namespace
{

using nlohmann::json;

const json & require(const json & j, const char * key)
{
  if (!j.contains(key)) {
    throw ScenarioError(key, "missing");
  }
  return j.at(key);
}

double number(const json & j, const std::string & field)
{
  if (!j.is_number()) {
    throw ScenarioError(field, "expected a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ScenarioError(field, "not finite");
  }
  return v;
}

Point2 point(const json & j, const std::string & field)
{
  if (!j.is_array() || j.size() != 2) {
    throw ScenarioError(field, "expected [x, y]");
  }
  return {number(j[0], field), number(j[1], field)};
}

GridMap parseMap(const json & j, const std::filesystem::path & baseDir)
{
  if (!j.is_object()) {
    throw ScenarioError("map", "expected an object");
  }
  const double res = j.contains("resolution") ? number(j.at("resolution"), "map.resolution") : 1.0;
  if (!(res > 0.0)) {
    throw ScenarioError("map.resolution", "must be positive");
  }
  try {
    if (j.contains("rows")) {
      const json & rows = j.at("rows");
      if (!rows.is_array() || rows.empty() || !rows[0].is_string()) {
        throw ScenarioError("map.rows", "expected a list of strings");
      }
      std::string text = std::to_string(rows[0].get<std::string>().size()) + " " +
        std::to_string(rows.size()) + "\n";
      for (const auto & r : rows) {
        if (!r.is_string()) {
          throw ScenarioError("map.rows", "expected a list of strings");
        }
        text += r.get<std::string>() + "\n";
      }
      return loadGrid(text, GridFormat::AsciiGrid, res);
    }
    const json & file = require(j, "file");
    if (!file.is_string()) {
      throw ScenarioError("map.file", "expected a path string");
    }
    std::string format = "ascii-grid";
    if (j.contains("format")) {
      if (!j.at("format").is_string()) {
        throw ScenarioError("map.format", "expected a string");
      }
      format = j.at("format").get<std::string>();
    }
    GridFormat gf;
    if (format == "ascii-grid") {
      gf = GridFormat::AsciiGrid;
    } else if (format == "pgm") {
      gf = GridFormat::Pgm;
    } else {
      throw ScenarioError("map.format", "unknown format '" + format + "'");
    }
    std::filesystem::path p = file.get<std::string>();
    if (p.is_relative()) {
      p = baseDir / p;
    }
    return loadGridFile(p, gf, res);
  } catch (const ScenarioError &) {
    throw;
  } catch (const Error & e) {
    throw ScenarioError("map", e.what());
  }
}

bool insideMap(const GridMap & m, Point2 p)
{
  return p.x >= 0.0 && p.y >= 0.0 && p.x <= m.worldWidth() && p.y <= m.worldHeight();
}

void checkBase(const Scenario & sc)
{
  if (!insideMap(sc.map, sc.base)) {
    throw ScenarioError("base", "outside the map");
  }
  const CellIndex bc = sc.map.cellOf(sc.base);
  if (sc.map.occupied(bc.x, bc.y)) {
    throw ScenarioError("base", "inside an occupied cell");
  }
}

}  // namespace

Polygon rectangleFootprint(double xmin, double ymin, double xmax, double ymax)
{
  return Polygon::fromVertices({{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}});
}

Scenario parseScenario(std::string_view text, const std::filesystem::path & baseDir)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error & e) {
    throw ScenarioError("<document>", e.what());
  }
  if (!j.is_object()) {
    throw ScenarioError("<document>", "expected a JSON object");
  }
  Scenario sc;
  sc.map = parseMap(require(j, "map"), baseDir);
  sc.base = point(require(j, "base"), "base");
  if (j.contains("base_is_obstacle")) {
    if (!j.at("base_is_obstacle").is_boolean()) {
      throw ScenarioError("base_is_obstacle", "expected true or false");
    }
    sc.baseIsObstacle = j.at("base_is_obstacle").get<bool>();
  }
  sc.goal = point(require(j, "goal"), "goal");
  sc.maxTetherLength = number(require(j, "max_tether_length"), "max_tether_length");
  sc.anchorOffset = point(require(j, "anchor_offset"), "anchor_offset");

  if (j.contains("footprint")) {
    const json & fp = j.at("footprint");
    if (!fp.is_array()) {
      throw ScenarioError("footprint", "expected a list of [x, y]");
    }
    std::vector<Point2> verts;
    for (const auto & v : fp) {
      verts.push_back(point(v, "footprint"));
    }
    try {
      sc.footprint = Polygon::fromVertices(std::move(verts));
    } catch (const Error & e) {
      throw ScenarioError("footprint", e.what());
    }
  } else {
    sc.footprint = rectangleFootprint(-0.6, -0.4, 0.6, 0.4);
  }

  {
    const json & iv = require(j, "sef_interval");
    const Point2 lohi = point(iv, "sef_interval");
    try {
      sc.sefInterval = AngleInterval::make(lohi.x, lohi.y);
    } catch (const Error & e) {
      throw ScenarioError("sef_interval", e.what());
    }
  }

  if (j.contains("search_resolution")) {
    const json & r = j.at("search_resolution");
    if (!r.is_object()) {
      throw ScenarioError("search_resolution", "expected an object");
    }
    if (r.contains("x")) {sc.resolution.x = number(r.at("x"), "search_resolution.x");}
    if (r.contains("y")) {sc.resolution.y = number(r.at("y"), "search_resolution.y");}
    if (r.contains("theta_bins")) {
      if (!r.at("theta_bins").is_number_integer() || r.at("theta_bins").get<int>() < 1) {
        throw ScenarioError("search_resolution.theta_bins", "expected a positive integer");
      }
      sc.resolution.thetaBins = r.at("theta_bins").get<int>();
    }
  }

  {
    const json & pr = require(j, "primitives");
    if (!pr.is_object()) {
      throw ScenarioError("primitives", "expected an object");
    }
    const double kappaMax = number(require(pr, "max_curvature"), "primitives.max_curvature");
    if (!(kappaMax >= 0.0)) {
      throw ScenarioError("primitives.max_curvature", "must be non-negative");
    }
    if (pr.contains("list")) {
      for (const auto & item : pr.at("list")) {
        MotionPrimitive m;
        m.kappa = number(require(item, "kappa"), "primitives.list.kappa");
        m.dir = static_cast<int>(number(require(item, "dir"), "primitives.list.dir"));
        m.dis = number(require(item, "dis"), "primitives.list.dis");
        try {
          validatePrimitive(m, kappaMax);
        } catch (const Error & e) {
          throw ScenarioError("primitives.list", e.what());
        }
        sc.primitives.push_back(m);
      }
    } else {
      const double len = number(require(pr, "length"), "primitives.length");
      if (!(len > 0.0)) {
        throw ScenarioError("primitives.length", "must be positive");
      }
      sc.primitives = defaultPrimitiveSet(kappaMax, len);
      if (kappaMax == 0.0) {
        sc.primitives = {{0.0, 1, len}, {0.0, -1, len}};
      }
    }
    if (sc.primitives.empty()) {
      throw ScenarioError("primitives", "empty primitive set");
    }
  }

  if (j.contains("cost_weights")) {
    const json & w = j.at("cost_weights");
    if (!w.is_array() || w.size() != 3) {
      throw ScenarioError("cost_weights", "expected [k1, k2, k3]");
    }
    sc.weights = {number(w[0], "cost_weights"), number(w[1], "cost_weights"),
      number(w[2], "cost_weights")};
  }
  sc.goalTolerance = j.contains("goal_tolerance") ?
    number(j.at("goal_tolerance"), "goal_tolerance") :
    0.5 * std::min(sc.resolution.x, sc.resolution.y);
  if (j.contains("waypoint_resolution")) {
    sc.waypointResolution = number(j.at("waypoint_resolution"), "waypoint_resolution");
  }
  if (j.contains("max_expansions")) {
    if (!j.at("max_expansions").is_number_unsigned()) {
      throw ScenarioError("max_expansions", "expected a non-negative integer");
    }
    sc.maxExpansions = j.at("max_expansions").get<std::size_t>();
  }

  {
    const json & st = require(j, "start");
    if (!st.is_object()) {
      throw ScenarioError("start", "expected an object with x, y, theta");
    }
    sc.startPose.x = number(require(st, "x"), "start.x");
    sc.startPose.y = number(require(st, "y"), "start.y");
    const json & th = require(st, "theta");
    if (th.is_string()) {
      if (th.get<std::string>() != "align") {
        throw ScenarioError("start.theta", "expected a number or \"align\"");
      }
      checkBase(sc);
      try {
        const WorldModel world(sc.map);
        sc.startPose.theta = alignedStartHeading(world, sc.base,
            sc.startPose.position(), sc.anchorOffset, sc.sefInterval);
      } catch (const Error & e) {
        throw ScenarioError("start.theta", e.what());
      }
    } else {
      sc.startPose.theta = wrapToPi(number(th, "start.theta"));
    }
  }
  validateScenario(sc);
  return sc;
}

void validateScenario(const Scenario & sc)
{
  const GridMap & m = sc.map;
  checkBase(sc);
  if (!insideMap(m, sc.goal)) {
    throw ScenarioError("goal", "outside the map");
  }
  if (!(sc.maxTetherLength > 0.0)) {
    throw ScenarioError("max_tether_length", "must be positive");
  }
  if (!(sc.weights.k1 > 0.0) || !(sc.weights.k2 >= 0.0) || !(sc.weights.k3 >= 0.0)) {
    throw ScenarioError("cost_weights", "k1 must be positive, k2 and k3 non-negative");
  }
  if (!(sc.resolution.x > 0.0) || !(sc.resolution.y > 0.0)) {
    throw ScenarioError("search_resolution", "resolutions must be positive");
  }
  if (!(sc.goalTolerance >= 0.0)) {
    throw ScenarioError("goal_tolerance", "must be non-negative");
  }
  if (!(sc.waypointResolution > 0.0)) {
    throw ScenarioError("waypoint_resolution", "must be positive");
  }
  const WorldModel world(m, sc.baseIsObstacle ? std::optional<Point2>(sc.base) : std::nullopt);
  if (!world.isFootprintFree(footprintAt(sc.footprint, sc.startPose))) {
    throw ScenarioError("start", "start footprint is in collision");
  }
}

Scenario loadScenario(const std::filesystem::path & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("<file>", "cannot open '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseScenario(ss.str(), path.parent_path());
}

}  // namespace seftpp
