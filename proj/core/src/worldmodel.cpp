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

#include "seftpp/worldmodel.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <utility>

namespace seftpp
{

GridMap::GridMap(int w, int h, double res)
: width(w), height(h), resolution(res)
{
  if (w < 1 || h < 1) {
    throw Error("grid map: width and height must be >= 1");
  }
  if (!(res > 0.0) || !std::isfinite(res)) {
    throw Error("grid map: resolution must be positive");
  }
  cells.assign(static_cast<std::size_t>(w) * h, 0);
}

void GridMap::setOccupied(int ix, int iy, bool value)
{
  if (!inBounds(ix, iy)) {
    throw Error("grid map: cell out of bounds");
  }
  cells[static_cast<std::size_t>(iy) * width + ix] = value ? 1 : 0;
}

CellIndex GridMap::cellOf(Point2 p) const
{
  return {static_cast<int>(std::floor(p.x / resolution)),
    static_cast<int>(std::floor(p.y / resolution))};
}

Point2 GridMap::cellCenter(CellIndex c) const
{
  return {(c.x + 0.5) * resolution, (c.y + 0.5) * resolution};
}

namespace
{

std::vector<std::string> splitLines(std::string_view bytes)
{
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) {
      end = bytes.size();
    }
    std::string line(bytes.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    lines.push_back(std::move(line));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) {
    lines.pop_back();
  }
  return lines;
}

GridMap loadAscii(std::string_view bytes, double resolution)
{
  const auto lines = splitLines(bytes);
  if (lines.empty()) {
    throw ParseError("empty grid file", 1);
  }
  std::istringstream header(lines[0]);
  long w = 0, h = 0;
  std::string extra;
  if (!(header >> w >> h) || (header >> extra)) {
    throw ParseError("header must be \"W H\"", 1);
  }
  if (w < 1 || h < 1 || w > 100000 || h > 100000) {
    throw ParseError("grid dimensions out of range", 1);
  }
  if (static_cast<long>(lines.size()) - 1 != h) {
    throw ParseError("expected " + std::to_string(h) + " rows, found " +
            std::to_string(lines.size() - 1), static_cast<int>(lines.size()) + 1);
  }
  GridMap map(static_cast<int>(w), static_cast<int>(h), resolution);
  for (int row = 0; row < h; ++row) {
    const std::string & line = lines[row + 1];
    const int lineNo = row + 2;
    if (static_cast<long>(line.size()) != w) {
      throw ParseError("expected " + std::to_string(w) + " columns, found " +
              std::to_string(line.size()), lineNo);
    }
    for (int col = 0; col < w; ++col) {
      if (line[col] == '#') {
        map.setOccupied(col, row);
      } else if (line[col] != '.') {
        throw ParseError(std::string("unexpected character '") + line[col] + "'", lineNo);
      }
    }
  }
  return map;
}

class PgmReader
{
public:
  explicit PgmReader(std::string_view bytes)
  : bytes_(bytes) {}

  std::string token()
  {
    skipSpaceAndComments();
    if (pos_ >= bytes_.size()) {
      throw ParseError("unexpected end of pgm data", line_);
    }
    std::string out;
    while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      out += bytes_[pos_++];
    }
    return out;
  }

  long number(const char * what)
  {
    const std::string t = token();
    try {
      std::size_t used = 0;
      const long v = std::stol(t, &used);
      if (used != t.size()) {
        throw std::invalid_argument(t);
      }
      return v;
    } catch (const std::logic_error &) {
      throw ParseError(std::string("bad ") + what + " '" + t + "'", line_);
    }
  }

  /// Consumes the single whitespace that precedes binary raster data.
  void skipSingleWhitespace()
  {
    if (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '\n') {
        ++line_;
      }
      ++pos_;
    }
  }

  std::string_view rest() const {return bytes_.substr(pos_);}
  int line() const {return line_;}

private:
  void skipSpaceAndComments()
  {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
          ++pos_;
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') {
          ++line_;
        }
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_{0};
  int line_{1};
};

GridMap loadPgm(std::string_view bytes, double resolution)
{
  if (bytes.empty()) {
    throw ParseError("empty pgm file", 1);
  }
  PgmReader reader(bytes);
  const std::string magic = reader.token();
  if (magic != "P2" && magic != "P5") {
    throw ParseError("unsupported pgm magic '" + magic + "'", reader.line());
  }
  const long w = reader.number("width");
  const long h = reader.number("height");
  const long maxval = reader.number("maxval");
  if (w < 1 || h < 1 || w > 100000 || h > 100000) {
    throw ParseError("pgm dimensions out of range", reader.line());
  }
  if (maxval < 1 || maxval > 65535) {
    throw ParseError("pgm maxval out of range", reader.line());
  }
  GridMap map(static_cast<int>(w), static_cast<int>(h), resolution);
  const std::size_t count = static_cast<std::size_t>(w) * h;
  if (magic == "P2") {
    for (std::size_t k = 0; k < count; ++k) {
      const long v = reader.number("pixel");
      if (v < 0 || v > maxval) {
        throw ParseError("pgm pixel out of range", reader.line());
      }
      map.setOccupied(static_cast<int>(k % w), static_cast<int>(h - 1 - k / w), v < 128);
    }
  } else {
    reader.skipSingleWhitespace();
    const std::string_view raster = reader.rest();
    const std::size_t bpp = maxval > 255 ? 2 : 1;
    if (raster.size() < count * bpp) {
      throw ParseError("pgm raster truncated", reader.line());
    }
    for (std::size_t k = 0; k < count; ++k) {
      long v = static_cast<unsigned char>(raster[k * bpp]);
      if (bpp == 2) {
        v = (v << 8) | static_cast<unsigned char>(raster[k * bpp + 1]);
      }
      map.setOccupied(static_cast<int>(k % w), static_cast<int>(h - 1 - k / w), v < 128);
    }
  }
  return map;
}

}  // namespace

GridMap loadGrid(std::string_view bytes, GridFormat format, double resolution)
{
  return format == GridFormat::AsciiGrid ? loadAscii(bytes, resolution) :
         loadPgm(bytes, resolution);
}

GridMap loadGridFile(const std::filesystem::path & path, GridFormat format, double resolution)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open map file '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return loadGrid(ss.str(), format, resolution);
}

std::string toAsciiGrid(const GridMap & map)
{
  std::string out = std::to_string(map.width) + " " + std::to_string(map.height) + "\n";
  for (int row = 0; row < map.height; ++row) {
    for (int col = 0; col < map.width; ++col) {
      out += map.occupied(col, row) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

namespace
{

std::vector<Point2> traceOuterBoundary(const GridMap & map, const std::vector<CellIndex> & cells,
  const std::vector<int> & label, int id)
{
  auto inComp = [&](int ix, int iy) {
      return map.inBounds(ix, iy) && label[static_cast<std::size_t>(iy) * map.width + ix] == id;
    };
  using Vertex = std::pair<int, int>;
  std::map<Vertex, std::vector<Vertex>> next;
  for (const auto & c : cells) {
    const int i = c.x, j = c.y;
    if (!inComp(i, j - 1)) {next[{i, j}].push_back({i + 1, j});}
    if (!inComp(i + 1, j)) {next[{i + 1, j}].push_back({i + 1, j + 1});}
    if (!inComp(i, j + 1)) {next[{i + 1, j + 1}].push_back({i, j + 1});}
    if (!inComp(i - 1, j)) {next[{i, j + 1}].push_back({i, j});}
  }
  // cells[0] is the lexicographically smallest cell, so its left side is on the outer contour.
  const Vertex start{cells[0].x, cells[0].y + 1};
  Vertex prev = start;
  Vertex cur{cells[0].x, cells[0].y};
  std::vector<Vertex> loop{start};
  const std::size_t limit = 4 * cells.size() + 4;
  while (cur != start && loop.size() <= limit) {
    loop.push_back(cur);
    const auto & outs = next.at(cur);
    Vertex chosen = outs[0];
    if (outs.size() > 1) {
      const int dx = cur.first - prev.first;
      const int dy = cur.second - prev.second;
      for (const auto & o : outs) {
        const int ex = o.first - cur.first;
        const int ey = o.second - cur.second;
        if (dx * ey - dy * ex > 0) {
          chosen = o;
        }
      }
    }
    prev = cur;
    cur = chosen;
  }
  std::vector<Point2> ring;
  const std::size_t n = loop.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex & a = loop[(k + n - 1) % n];
    const Vertex & b = loop[k];
    const Vertex & c = loop[(k + 1) % n];
    const long turn = static_cast<long>(b.first - a.first) * (c.second - b.second) -
      static_cast<long>(b.second - a.second) * (c.first - b.first);
    if (turn != 0) {
      ring.push_back({b.first * map.resolution, b.second * map.resolution});
    }
  }
  return ring;
}

}  // namespace

std::vector<ObstaclePolygon> extractObstacles(const GridMap & map)
{
  std::vector<int> label(map.cells.size(), 0);
  std::vector<ObstaclePolygon> out;
  std::vector<double> usedX;
  int next = 0;
  for (int ix = 0; ix < map.width; ++ix) {
    for (int iy = 0; iy < map.height; ++iy) {
      const std::size_t idx = static_cast<std::size_t>(iy) * map.width + ix;
      if (!map.occupied(ix, iy) || label[idx] != 0) {
        continue;
      }
      ObstaclePolygon obs;
      obs.id = ++next;
      std::queue<CellIndex> frontier;
      frontier.push({ix, iy});
      label[idx] = obs.id;
      while (!frontier.empty()) {
        const CellIndex c = frontier.front();
        frontier.pop();
        obs.cells.push_back(c);
        const CellIndex nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (const auto & n : nbrs) {
          if (!map.inBounds(n.x, n.y) || !map.occupied(n.x, n.y)) {
            continue;
          }
          const std::size_t nidx = static_cast<std::size_t>(n.y) * map.width + n.x;
          if (label[nidx] == 0) {
            label[nidx] = obs.id;
            frontier.push(n);
          }
        }
      }
      std::sort(obs.cells.begin(), obs.cells.end(), [](CellIndex a, CellIndex b) {
          return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
      obs.boundary.vertices = traceOuterBoundary(map, obs.cells, label, obs.id);

      // Representative: smallest cell center, nudged inside the cell until its x is unique.
      std::optional<Point2> rep;
      for (const auto & c : obs.cells) {
        const Point2 center = map.cellCenter(c);
        for (int k = 0; k < 16 && !rep; ++k) {
          const double offset = k == 0 ? 0.0 :
            ((k % 2 == 1) ? 1.0 : -1.0) * 0.25 * map.resolution / std::pow(2.0, (k - 1) / 2);
          const double x = center.x + offset;
          const bool clash = std::any_of(usedX.begin(), usedX.end(),
              [x](double u) {return std::abs(u - x) < 1e-9;});
          if (!clash) {
            rep = Point2{x, center.y};
          }
        }
        if (rep) {
          break;
        }
      }
      if (!rep) {
        throw Error("extractObstacles: cannot place a unique ray");
      }
      obs.representative = *rep;
      usedX.push_back(rep->x);
      out.push_back(std::move(obs));
    }
  }
  return out;
}

std::vector<Ray> raysOf(const std::vector<ObstaclePolygon> & obstacles)
{
  std::vector<Ray> rays;
  rays.reserve(obstacles.size());
  for (const auto & o : obstacles) {
    rays.push_back({o.id, o.representative});
  }
  return rays;
}

namespace
{

template<class Occupied>
bool footprintFreeImpl(const GridMap & map, const Polygon & fp, Occupied && occupied)
{
  const auto & v = fp.vertices;
  double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto & p : v) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double r = map.resolution;
  const int i0 = static_cast<int>(std::floor(xmin / r)) - 1;
  const int i1 = static_cast<int>(std::floor(xmax / r));
  const int j0 = static_cast<int>(std::floor(ymin / r)) - 1;
  const int j1 = static_cast<int>(std::floor(ymax / r));
  for (int j = j0; j <= j1; ++j) {
    for (int i = i0; i <= i1; ++i) {
      if (occupied(i, j) && polygonIntersectsBox(v, i * r, j * r, (i + 1) * r, (j + 1) * r)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool isFootprintFree(const GridMap & map, const Polygon & fp)
{
  return footprintFreeImpl(map, fp, [&map](int i, int j) {return map.occupied(i, j);});
}

std::vector<Point2> shortestGridPath(const GridMap & map, Point2 from, Point2 to)
{
  const CellIndex a = map.cellOf(from);
  const CellIndex b = map.cellOf(to);
  if (map.occupied(a.x, a.y)) {
    throw Error("shortestGridPath: start point is not in a free cell");
  }
  if (map.occupied(b.x, b.y)) {
    throw Error("shortestGridPath: goal point is not in a free cell");
  }
  const int w = map.width;
  const std::size_t n = map.cells.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> parent(n, -1);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  const int src = a.y * w + a.x;
  const int dst = b.y * w + b.x;
  dist[src] = 0.0;
  open.push({0.0, src});
  while (!open.empty()) {
    const auto [d, u] = open.top();
    open.pop();
    if (d > dist[u]) {
      continue;
    }
    if (u == dst) {
      break;
    }
    const int ux = u % w, uy = u / w;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) {
          continue;
        }
        const int vx = ux + dx, vy = uy + dy;
        if (map.occupied(vx, vy)) {
          continue;
        }
        if (dx != 0 && dy != 0 && (map.occupied(ux + dx, uy) || map.occupied(ux, uy + dy))) {
          continue;
        }
        const double nd = d + ((dx != 0 && dy != 0) ? std::sqrt(2.0) : 1.0);
        const int v = vy * w + vx;
        if (nd < dist[v]) {
          dist[v] = nd;
          parent[v] = u;
          open.push({nd, v});
        }
      }
    }
  }
  if (!std::isfinite(dist[dst])) {
    throw NoPathError("shortestGridPath: goal unreachable");
  }
  std::vector<Point2> path;
  for (int u = dst; u != -1; u = parent[u]) {
    path.push_back(map.cellCenter({u % w, u / w}));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

WorldModel::WorldModel(GridMap map, std::optional<Point2> collisionOverlay)
: map_(std::move(map))
{
  if (collisionOverlay) {
    overlay_ = map_.cellOf(*collisionOverlay);
  }
  obstacles_ = extractObstacles(map_);
  rays_ = raysOf(obstacles_);
  for (int gx = 0; gx <= map_.width; ++gx) {
    for (int gy = 0; gy <= map_.height; ++gy) {
      const int m = cornerMask(gx, gy);
      if (std::popcount(static_cast<unsigned>(m)) == 1 || m == 0b0101 || m == 0b1010) {
        corners_.push_back({gx * map_.resolution, gy * map_.resolution});
      }
    }
  }
}

int WorldModel::cornerMask(int gx, int gy) const
{
  // Bits: 1 = NE cell, 2 = NW, 4 = SW, 8 = SE.
  return (map_.occupied(gx, gy) ? 1 : 0) | (map_.occupied(gx - 1, gy) ? 2 : 0) |
         (map_.occupied(gx - 1, gy - 1) ? 4 : 0) | (map_.occupied(gx, gy - 1) ? 8 : 0);
}

bool WorldModel::isFootprintFree(const Polygon & fp) const
{
  return footprintFreeImpl(map_, fp, [this](int i, int j) {return isCollisionCell(i, j);});
}

bool WorldModel::segmentBlocked(Point2 a, Point2 b) const
{
  constexpr double kInside = 1e-9;
  const double r = map_.resolution;
  const Point2 p{a.x / r, a.y / r};
  const Point2 q{b.x / r, b.y / r};
  const Point2 d = q - p;
  auto chordInterior = [&](int i, int j) {
      double t0 = 0.0, t1 = 1.0;
      const double lo[2] = {static_cast<double>(i), static_cast<double>(j)};
      const double pp[2] = {p.x, p.y};
      const double dd[2] = {d.x, d.y};
      for (int k = 0; k < 2; ++k) {
        if (dd[k] == 0.0) {
          if (pp[k] < lo[k] || pp[k] > lo[k] + 1.0) {
            return false;
          }
          continue;
        }
        double ta = (lo[k] - pp[k]) / dd[k];
        double tb = (lo[k] + 1.0 - pp[k]) / dd[k];
        if (ta > tb) {
          std::swap(ta, tb);
        }
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
      }
      if (!(t1 > t0)) {
        return false;
      }
      const double tm = 0.5 * (t0 + t1);
      const double mx = p.x + tm * d.x;
      const double my = p.y + tm * d.y;
      return mx > i + kInside && mx < i + 1 - kInside && my > j + kInside && my < j + 1 - kInside;
    };
  const double xmin = std::min(p.x, q.x);
  const double xmax = std::max(p.x, q.x);
  const int i0 = static_cast<int>(std::floor(xmin)) - 1;
  const int i1 = static_cast<int>(std::floor(xmax));
  for (int i = i0; i <= i1; ++i) {
    const double cx0 = std::max(xmin, static_cast<double>(i));
    const double cx1 = std::min(xmax, static_cast<double>(i + 1));
    if (cx0 > cx1) {
      continue;
    }
    double y0, y1;
    if (d.x == 0.0) {
      y0 = p.y;
      y1 = q.y;
    } else {
      y0 = p.y + (cx0 - p.x) / d.x * d.y;
      y1 = p.y + (cx1 - p.x) / d.x * d.y;
    }
    if (y0 > y1) {
      std::swap(y0, y1);
    }
    const int j0 = static_cast<int>(std::floor(y0)) - 1;
    const int j1 = static_cast<int>(std::floor(y1));
    for (int j = j0; j <= j1; ++j) {
      if (map_.occupied(i, j) && chordInterior(i, j)) {
        return true;
      }
    }
  }
  return false;
}

bool WorldModel::isSupportedCorner(Point2 a, Point2 p, Point2 c) const
{
  const double r = map_.resolution;
  const double gxf = std::round(p.x / r);
  const double gyf = std::round(p.y / r);
  if (std::abs(p.x - gxf * r) > 1e-9 || std::abs(p.y - gyf * r) > 1e-9) {
    return false;
  }
  const int mask = cornerMask(static_cast<int>(gxf), static_cast<int>(gyf));
  if (!(std::popcount(static_cast<unsigned>(mask)) == 1 || mask == 0b0101 || mask == 0b1010)) {
    return false;
  }
  const Point2 u = a - p;
  const Point2 v = c - p;
  const double turn = cross(p - a, c - p);
  if (std::abs(turn) <= 1e-12 * norm(u) * norm(v)) {
    return false;
  }
  const double au = std::atan2(u.y, u.x);
  const double av = std::atan2(v.y, v.x);
  double start = au;
  double width = wrapTo2Pi(av - au);
  if (width > kPi) {
    start = av;
    width = kTwoPi - width;
  }
  constexpr double kEps = 1e-12;
  for (int q = 0; q < 4; ++q) {
    if (!(mask & (1 << q))) {
      continue;
    }
    const double qs = q * 0.5 * kPi;
    const double qw = 0.5 * kPi;
    if (wrapTo2Pi(qs - start) < width - kEps || wrapTo2Pi(start - qs) < qw - kEps) {
      return true;
    }
  }
  return false;
}

bool WorldModel::hullBlocked(const ConvexHull & hull, Point2 exempt) const
{
  constexpr double kTol = 1e-9;
  double xmin = hull.vertices[0].x, xmax = xmin, ymin = hull.vertices[0].y, ymax = ymin;
  for (const auto & v : hull.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  bool cornerHit = false;
  forEachCornerInBox(xmin - kTol, ymin - kTol, xmax + kTol, ymax + kTol, [&](const Point2 & c) {
      if (!cornerHit && distance(c, exempt) > kTol && hullContains(hull, c, kTol)) {
        cornerHit = true;
      }
    });
  if (cornerHit) {
    return true;
  }
  if (hull.kind == HullKind::Point) {
    return false;
  }
  if (hull.kind == HullKind::Segment) {
    return segmentBlocked(hull.vertices[0], hull.vertices[1]);
  }
  // Slab scan: for each cell row, the hull's x-extent inside the row (shrunk by kTol).
  const double r = map_.resolution;
  const auto & v = hull.vertices;
  const int j0 = static_cast<int>(std::floor(ymin / r));
  const int j1 = static_cast<int>(std::floor(ymax / r));
  for (int j = j0; j <= j1; ++j) {
    const double ylo = std::max(ymin, j * r + kTol);
    const double yhi = std::min(ymax, (j + 1) * r - kTol);
    if (ylo > yhi) {
      continue;
    }
    double sxmin = std::numeric_limits<double>::infinity();
    double sxmax = -sxmin;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Point2 a = v[k];
      const Point2 b = v[(k + 1) % v.size()];
      if (a.y >= ylo && a.y <= yhi) {
        sxmin = std::min(sxmin, a.x);
        sxmax = std::max(sxmax, a.x);
      }
      for (double yl : {ylo, yhi}) {
        if ((a.y - yl) * (b.y - yl) < 0.0) {
          const double x = a.x + (yl - a.y) / (b.y - a.y) * (b.x - a.x);
          sxmin = std::min(sxmin, x);
          sxmax = std::max(sxmax, x);
        }
      }
    }
    if (sxmin > sxmax) {
      continue;
    }
    const int i0 = static_cast<int>(std::floor((sxmin - kTol) / r));
    const int i1 = static_cast<int>(std::floor((sxmax + kTol) / r));
    for (int i = i0; i <= i1; ++i) {
      if (i * r + kTol <= sxmax && (i + 1) * r - kTol >= sxmin && map_.occupied(i, j)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace seftpp
