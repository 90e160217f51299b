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

#ifndef SEFTPP__WORLDMODEL_HPP_
#define SEFTPP__WORLDMODEL_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seftpp/geometry.hpp"
#include "seftpp/homotopy.hpp"

namespace seftpp
{

class ParseError : public Error
{
public:
  ParseError(const std::string & what, int line)
  : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  /// 1-based line number, or 0 when not tied to a line.
  int line() const {return line_;}

private:
  int line_;
};

class NoPathError : public Error
{
public:
  using Error::Error;
};

struct CellIndex
{
  int x{0};
  int y{0};

  friend bool operator==(const CellIndex &, const CellIndex &) = default;
};

/**
 * @brief Occupancy grid. Cell (i, j) covers [i, i+1) x [j, j+1) scaled by resolution.
 */
struct GridMap
{
  int width{0};
  int height{0};
  double resolution{1.0};
  std::vector<std::uint8_t> cells;

  GridMap() = default;
  GridMap(int width, int height, double resolution = 1.0);

  bool inBounds(int ix, int iy) const {return ix >= 0 && iy >= 0 && ix < width && iy < height;}
  /// Out-of-bounds cells count as occupied.
  bool occupied(int ix, int iy) const
  {
    return !inBounds(ix, iy) || cells[static_cast<std::size_t>(iy) * width + ix] != 0;
  }
  void setOccupied(int ix, int iy, bool value = true);
  CellIndex cellOf(Point2 p) const;
  Point2 cellCenter(CellIndex c) const;
  double worldWidth() const {return width * resolution;}
  double worldHeight() const {return height * resolution;}
};

enum class GridFormat { AsciiGrid, Pgm };

/**
 * @brief Parses an occupancy grid
 * ascii-grid: "W H" header then H rows of W characters ('#' occupied, '.' free),
 * the first row being y = 0. pgm: P2 or P5, value < 128 is occupied, first image
 * row is the top of the map.
 */
GridMap loadGrid(std::string_view bytes, GridFormat format, double resolution = 1.0);
GridMap loadGridFile(const std::filesystem::path & path, GridFormat format, double resolution = 1.0);
std::string toAsciiGrid(const GridMap & map);

struct ObstaclePolygon
{
  int id{0};
  Polygon boundary;
  Point2 representative;
  std::vector<CellIndex> cells;
};

/// One obstacle per 4-connected occupied component, ids starting at 1.
std::vector<ObstaclePolygon> extractObstacles(const GridMap & map);
std::vector<Ray> raysOf(const std::vector<ObstaclePolygon> & obstacles);

/// Conservative: touching an occupied or out-of-bounds cell counts as collision.
bool isFootprintFree(const GridMap & map, const Polygon & fp);

/// 8-connected Dijkstra over cell centers without corner cutting. Throws NoPathError.
std::vector<Point2> shortestGridPath(const GridMap & map, Point2 from, Point2 to);

/**
 * @class seftpp::WorldModel
 * @brief Map plus derived obstacle data used by the tether engine and the planner
 */
class WorldModel
{
public:
  /**
   * @param map Occupancy grid
   * @param collisionOverlay Point whose cell is treated as occupied for footprint
   * collision only (the tether base)
   */
  explicit WorldModel(GridMap map, std::optional<Point2> collisionOverlay = std::nullopt);

  const GridMap & map() const {return map_;}
  const std::vector<ObstaclePolygon> & obstacles() const {return obstacles_;}
  const std::vector<Ray> & rays() const {return rays_;}
  /// Convex obstacle corners, sorted by x then y.
  const std::vector<Point2> & corners() const {return corners_;}
  std::optional<CellIndex> overlayCell() const {return overlay_;}

  bool isCollisionCell(int ix, int iy) const
  {
    return map_.occupied(ix, iy) || (overlay_ && overlay_->x == ix && overlay_->y == iy);
  }
  bool isFootprintFree(const Polygon & fp) const;

  /// True when the open segment passes through the interior of an occupied cell.
  bool segmentBlocked(Point2 a, Point2 b) const;

  /// True when p is a convex corner whose obstacle lies inside the bend a -> p -> c.
  bool isSupportedCorner(Point2 a, Point2 p, Point2 c) const;

  /**
   * @brief True when the closed hull overlaps an occupied cell or contains an
   * obstacle corner other than exempt
   */
  bool hullBlocked(const ConvexHull & hull, Point2 exempt) const;

  template<class F>
  void forEachCornerInBox(double xmin, double ymin, double xmax, double ymax, F && f) const
  {
    auto it = std::lower_bound(corners_.begin(), corners_.end(), xmin,
        [](const Point2 & c, double x) {return c.x < x;});
    for (; it != corners_.end() && it->x <= xmax; ++it) {
      if (it->y >= ymin && it->y <= ymax) {
        f(*it);
      }
    }
  }

private:
  int cornerMask(int gx, int gy) const;

  GridMap map_;
  std::optional<CellIndex> overlay_;
  std::vector<ObstaclePolygon> obstacles_;
  std::vector<Ray> rays_;
  std::vector<Point2> corners_;
};

}  // namespace seftpp

#endif  // SEFTPP__WORLDMODEL_HPP_
