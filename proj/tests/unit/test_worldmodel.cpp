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
#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "seftpp/scenario.hpp"
#include "seftpp/worldmodel.hpp"
#include "support/generators.hpp"

namespace seftpp
{
namespace
{

using testing::Rng;

GridMap randomNoiseMap(Rng & rng, int w, int h, double density)
{
  GridMap map(w, h, 1.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (rng.chance(density)) {
        map.setOccupied(x, y);
      }
    }
  }
  return map;
}

// Exact test: does the open segment a-b pass through the open box?
bool segmentThroughBox(Point2 a, Point2 b, double x0, double y0, double x1, double y1)
{
  double t0 = 0.0, t1 = 1.0;
  const double d[2] = {b.x - a.x, b.y - a.y};
  const double lo[2] = {x0 - a.x, y0 - a.y};
  const double hi[2] = {x1 - a.x, y1 - a.y};
  for (int k = 0; k < 2; ++k) {
    if (d[k] == 0.0) {
      if (!(lo[k] < 0.0 && 0.0 < hi[k])) {
        return false;
      }
      continue;
    }
    double ta = lo[k] / d[k], tb = hi[k] / d[k];
    if (ta > tb) {
      std::swap(ta, tb);
    }
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
  }
  return t1 - t0 > 1e-9;
}

TEST(WorldModel, AsciiGridRowsStartAtYZero)
{
  const GridMap map = loadGrid("3 2\n#..\n..#\n", GridFormat::AsciiGrid, 0.5);
  EXPECT_EQ(map.width, 3);
  EXPECT_EQ(map.height, 2);
  EXPECT_DOUBLE_EQ(map.resolution, 0.5);
  EXPECT_TRUE(map.occupied(0, 0));
  EXPECT_TRUE(map.occupied(2, 1));
  EXPECT_FALSE(map.occupied(2, 0));
  EXPECT_TRUE(map.occupied(-1, 0));
  EXPECT_TRUE(map.occupied(3, 1));
  EXPECT_EQ(map.cellOf({1.2, 0.7}), (CellIndex{2, 1}));
  EXPECT_EQ(loadGrid(toAsciiGrid(map), GridFormat::AsciiGrid, 0.5).cells, map.cells);
}

TEST(WorldModel, AsciiGridErrorsCarryLineNumbers)
{
  auto lineOf = [](const std::string & text) {
      try {
        (void)loadGrid(text, GridFormat::AsciiGrid);
      } catch (const ParseError & e) {
        return e.line();
      }
      return -1;
    };
  EXPECT_EQ(lineOf(""), 1);
  EXPECT_EQ(lineOf("3\n...\n"), 1);
  EXPECT_EQ(lineOf("3 2\n...\n.x.\n"), 3);
  EXPECT_EQ(lineOf("3 2\n...\n....\n"), 3);
  EXPECT_GT(lineOf("3 3\n...\n...\n"), 0);
}

TEST(WorldModel, PgmFirstRowIsTop)
{
  const GridMap p2 = loadGrid("P2\n# comment\n3 2\n255\n0 255 255\n255 255 10\n", GridFormat::Pgm);
  EXPECT_TRUE(p2.occupied(0, 1));
  EXPECT_TRUE(p2.occupied(2, 0));
  EXPECT_FALSE(p2.occupied(0, 0));
  EXPECT_FALSE(p2.occupied(1, 1));

  std::string p5 = "P5\n2 2\n255\n";
  p5 += std::string{static_cast<char>(200), static_cast<char>(0), static_cast<char>(127),
    static_cast<char>(128)};
  const GridMap bin = loadGrid(p5, GridFormat::Pgm);
  EXPECT_FALSE(bin.occupied(0, 1));
  EXPECT_TRUE(bin.occupied(1, 1));
  EXPECT_TRUE(bin.occupied(0, 0));
  EXPECT_FALSE(bin.occupied(1, 0));

  EXPECT_THROW(loadGrid("P3\n1 1\n255\n0\n", GridFormat::Pgm), ParseError);
  EXPECT_THROW(loadGrid("P2\n2 2\n255\n0 0 0\n", GridFormat::Pgm), ParseError);
  EXPECT_THROW(loadGrid("P2\n1 1\n255\n300\n", GridFormat::Pgm), ParseError);
}

TEST(WorldModel, ObstaclesAreFourConnectedComponents)
{
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const GridMap map = randomNoiseMap(rng, rng.integer(3, 20), rng.integer(3, 20), 0.35);
    const auto obstacles = extractObstacles(map);
    std::vector<int> owner(map.cells.size(), 0);
    std::set<double> rayX;
    for (const auto & o : obstacles) {
      for (const auto & c : o.cells) {
        ASSERT_TRUE(map.occupied(c.x, c.y));
        auto & slot = owner[static_cast<std::size_t>(c.y) * map.width + c.x];
        EXPECT_EQ(slot, 0);
        slot = o.id;
      }
      const CellIndex rc = map.cellOf(o.representative);
      EXPECT_TRUE(std::find(o.cells.begin(), o.cells.end(), rc) != o.cells.end());
      EXPECT_TRUE(rayX.insert(o.representative.x).second);
      EXPECT_GE(o.boundary.vertices.size(), 4u);
    }
    for (int y = 0; y < map.height; ++y) {
      for (int x = 0; x < map.width; ++x) {
        const int id = owner[static_cast<std::size_t>(y) * map.width + x];
        EXPECT_EQ(id != 0, map.occupied(x, y));
        // 4-neighbours share an owner.
        if (id != 0 && x + 1 < map.width && map.occupied(x + 1, y)) {
          EXPECT_EQ(owner[static_cast<std::size_t>(y) * map.width + x + 1], id);
        }
        if (id != 0 && y + 1 < map.height && map.occupied(x, y + 1)) {
          EXPECT_EQ(owner[static_cast<std::size_t>(y + 1) * map.width + x], id);
        }
      }
    }
  }
}

TEST(WorldModel, CornersAreConvexGridVertices)
{
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const GridMap map = randomNoiseMap(rng, rng.integer(3, 15), rng.integer(3, 15), 0.3);
    const WorldModel world(map);
    std::vector<Point2> expected;
    for (int gx = 0; gx <= map.width; ++gx) {
      for (int gy = 0; gy <= map.height; ++gy) {
        // Cells beyond the border count as occupied.
        const bool ne = map.occupied(gx, gy);
        const bool nw = map.occupied(gx - 1, gy);
        const bool sw = map.occupied(gx - 1, gy - 1);
        const bool se = map.occupied(gx, gy - 1);
        const int n = ne + nw + sw + se;
        if (n == 1 || (n == 2 && ne == sw)) {
          expected.push_back({static_cast<double>(gx), static_cast<double>(gy)});
        }
      }
    }
    auto got = world.corners();
    auto byXY = [](Point2 a, Point2 b) {return a.x < b.x || (a.x == b.x && a.y < b.y);};
    std::sort(expected.begin(), expected.end(), byXY);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), byXY));
    EXPECT_EQ(got, expected);
  }
}

TEST(WorldModel, FootprintFreeMatchesCellOracle)
{
  Rng rng(13);
  const Polygon body = Polygon::fromVertices({{-0.6, -0.4}, {0.6, -0.4}, {0.6, 0.4}, {-0.6, 0.4}});
  for (int trial = 0; trial < 30; ++trial) {
    const GridMap map = randomNoiseMap(rng, 12, 12, 0.15);
    for (int k = 0; k < 100; ++k) {
      const Pose2 pose{rng.uniform(-1, 13), rng.uniform(-1, 13), rng.uniform(-kPi, kPi)};
      const Polygon fp = footprintAt(body, pose);
      bool hit = false;
      for (int y = -2; y < 14 && !hit; ++y) {
        for (int x = -2; x < 14 && !hit; ++x) {
          hit = map.occupied(x, y) && polygonIntersectsBox(fp.vertices, x, y, x + 1, y + 1);
        }
      }
      EXPECT_EQ(isFootprintFree(map, fp), !hit);
      // Sampling can only confirm collisions.
      for (int s = 0; s < 200 && !hit; ++s) {
        const Point2 local{rng.uniform(-0.6, 0.6), rng.uniform(-0.4, 0.4)};
        const Point2 p = transformPoint(local, pose);
        const CellIndex c = map.cellOf(p);
        EXPECT_FALSE(map.occupied(c.x, c.y));
      }
    }
  }
}

TEST(WorldModel, OverlayOnlyAffectsFootprints)
{
  GridMap map(6, 6, 1.0);
  const WorldModel world(map, Point2{2.5, 2.5});
  EXPECT_TRUE(world.isCollisionCell(2, 2));
  EXPECT_FALSE(world.map().occupied(2, 2));
  EXPECT_TRUE(world.obstacles().empty());
  EXPECT_TRUE(world.corners().empty());
  EXPECT_FALSE(world.isFootprintFree(footprintAt(rectangleFootprint(-0.3, -0.3, 0.3, 0.3), Pose2{2.5, 2.5, 0.0})));
  EXPECT_TRUE(isFootprintFree(world.map(), footprintAt(rectangleFootprint(-0.3, -0.3, 0.3, 0.3), Pose2{2.5, 2.5, 0.0})));
  EXPECT_FALSE(world.segmentBlocked({0.5, 2.5}, {5.5, 2.5}));
}

TEST(WorldModel, SegmentBlockedMatchesClippingOracle)
{
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const GridMap map = randomNoiseMap(rng, 10, 10, 0.2);
    const WorldModel world(map);
    for (int k = 0; k < 200; ++k) {
      Point2 a = rng.point(0, 10, 0, 10);
      Point2 b = rng.point(0, 10, 0, 10);
      if (k % 4 == 0) {
        a = {std::floor(a.x), std::floor(a.y)};
        b = {std::floor(b.x), std::floor(b.y)};
      }
      bool expected = false;
      for (int y = 0; y < 10; ++y) {
        for (int x = 0; x < 10; ++x) {
          expected = expected || (map.occupied(x, y) && segmentThroughBox(a, b, x, y, x + 1, y + 1));
        }
      }
      EXPECT_EQ(world.segmentBlocked(a, b), expected) << a.x << "," << a.y << " -> " << b.x << "," << b.y;
    }
  }
}

TEST(WorldModel, SupportedCornerNeedsObstacleInsideBend)
{
  GridMap map(4, 4, 1.0);
  map.setOccupied(1, 1);
  const WorldModel world(map);
  // Corner (2, 2) is the top-right of the occupied cell.
  EXPECT_TRUE(world.isSupportedCorner({0.5, 2.5}, {2, 2}, {2.5, 0.5}));
  EXPECT_FALSE(world.isSupportedCorner({2.5, 0.5}, {2, 2}, {3.5, 3.0}));
  EXPECT_FALSE(world.isSupportedCorner({0, 2}, {2, 2}, {3, 2}));
  EXPECT_FALSE(world.isSupportedCorner({0.5, 2.5}, {2.5, 2.5}, {2.5, 0.5}));
}

// Reference 8-connected shortest path cost by Bellman-Ford relaxation.
double bellmanFordCost(const GridMap & map, CellIndex a, CellIndex b)
{
  const int w = map.width;
  std::vector<double> d(map.cells.size(), std::numeric_limits<double>::infinity());
  d[static_cast<std::size_t>(a.y) * w + a.x] = 0.0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int y = 0; y < map.height; ++y) {
      for (int x = 0; x < w; ++x) {
        if (map.occupied(x, y)) {
          continue;
        }
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = x + dx, ny = y + dy;
            if ((dx == 0 && dy == 0) || map.occupied(nx, ny)) {
              continue;
            }
            if (dx != 0 && dy != 0 && (map.occupied(x + dx, y) || map.occupied(x, y + dy))) {
              continue;
            }
            const double c = d[static_cast<std::size_t>(y) * w + x] +
              (dx != 0 && dy != 0 ? std::sqrt(2.0) : 1.0);
            double & t = d[static_cast<std::size_t>(ny) * w + nx];
            if (c < t - 1e-12) {
              t = c;
              changed = true;
            }
          }
        }
      }
    }
  }
  return d[static_cast<std::size_t>(b.y) * w + b.x];
}

TEST(WorldModel, ShortestGridPathMatchesBellmanFord)
{
  Rng rng(15);
  int reachable = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const GridMap map = randomNoiseMap(rng, rng.integer(4, 14), rng.integer(4, 14), 0.25);
    const CellIndex a{rng.integer(0, map.width - 1), rng.integer(0, map.height - 1)};
    const CellIndex b{rng.integer(0, map.width - 1), rng.integer(0, map.height - 1)};
    if (map.occupied(a.x, a.y) || map.occupied(b.x, b.y)) {
      EXPECT_THROW(shortestGridPath(map, map.cellCenter(a), map.cellCenter(b)), Error);
      continue;
    }
    const double ref = bellmanFordCost(map, a, b);
    if (!std::isfinite(ref)) {
      EXPECT_THROW(shortestGridPath(map, map.cellCenter(a), map.cellCenter(b)), NoPathError);
      continue;
    }
    ++reachable;
    const auto path = shortestGridPath(map, map.cellCenter(a), map.cellCenter(b));
    ASSERT_FALSE(path.empty());
    EXPECT_EQ(path.front(), map.cellCenter(a));
    EXPECT_EQ(path.back(), map.cellCenter(b));
    double cost = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
      cost += distance(path[i - 1], path[i]);
      EXPECT_LE(distance(path[i - 1], path[i]), std::sqrt(2.0) + 1e-12);
    }
    EXPECT_NEAR(cost, ref, 1e-9);
  }
  EXPECT_GT(reachable, 20);
}

}  // namespace
}  // namespace seftpp
