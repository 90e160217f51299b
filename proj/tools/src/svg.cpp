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

#include "seftpp_app/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <span>
#include <string_view>
#include <vector>

#include "seftpp/validator.hpp"

namespace seftpp::app
{

namespace
{

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") {
    s = "0.000";
  }
  return s;
}

struct Frame
{
  double scale;
  double mapHeight;
  double sx(double x) const {return x * scale;}
  double sy(double y) const {return (mapHeight - y) * scale;}
};

std::string pointList(const Frame & f, std::span<const Point2> pts)
{
  std::string out;
  for (const auto & p : pts) {
    if (!out.empty()) {
      out += ' ';
    }
    out += num(f.sx(p.x)) + "," + num(f.sy(p.y));
  }
  return out;
}

void polyline(std::string & out, std::string_view cls, const std::string & pts)
{
  out += "<polyline class=\"";
  out += cls;
  out += "\" fill=\"none\" points=\"" + pts + "\"/>\n";
}

void polygon(std::string & out, std::string_view cls, const std::string & pts)
{
  out += "<polygon class=\"";
  out += cls;
  out += "\" points=\"" + pts + "\"/>\n";
}

}  // namespace

std::string renderSvg(const Scenario & scenario, const PlanResult & result,
  const SvgOptions & options)
{
  const GridMap & map = scenario.map;
  const double res = map.resolution;
  const double worldW = map.width * res;
  const double worldH = map.height * res;
  const Frame f{options.scale, worldH};
  const double width = f.sx(worldW);
  const double mapPx = worldH * options.scale;
  const double stripTop = mapPx + 20.0;
  const double height = stripTop + options.stripHeight + 10.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
    num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<style>.obstacle{fill:#444}.base{fill:#c00}.footprint{fill:none;stroke:#06c}"
    ".goal{fill:#0a0}.path{stroke:#e80;stroke-width:2}.tether{stroke:#909;stroke-width:1}"
    ".phi{stroke:#06c;stroke-width:1.5}.phi-bound{stroke:#c00;stroke-dasharray:4 3}"
    ".frame{fill:none;stroke:#888}</style>\n";
  out += "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" +
    num(mapPx) + "\"/>\n";

  // Obstacles as horizontal runs of occupied cells.
  out += "<g class=\"obstacles\">\n";
  for (int y = 0; y < map.height; ++y) {
    int x = 0;
    while (x < map.width) {
      if (!map.occupied(x, y)) {
        ++x;
        continue;
      }
      int end = x;
      while (end < map.width && map.occupied(end, y)) {
        ++end;
      }
      out += "<rect class=\"obstacle\" x=\"" + num(f.sx(x * res)) + "\" y=\"" +
        num(f.sy((y + 1) * res)) + "\" width=\"" + num((end - x) * res * f.scale) +
        "\" height=\"" + num(res * f.scale) + "\"/>\n";
      x = end;
    }
  }
  out += "</g>\n";

  // Base triangle.
  {
    const double r = 0.8 * res;
    const Point2 b = scenario.base;
    const std::vector<Point2> tri{{b.x, b.y + r}, {b.x - r, b.y - r}, {b.x + r, b.y - r}};
    polygon(out, "base", pointList(f, tri));
  }

  // Footprints at start and at the final pose.
  auto drawFootprint = [&](const Pose2 & pose) {
      const Polygon fp = footprintAt(scenario.footprint, pose);
      polygon(out, "footprint", pointList(f, fp.vertices));
    };
  drawFootprint(scenario.startPose);
  out += "<circle class=\"goal\" cx=\"" + num(f.sx(scenario.goal.x)) + "\" cy=\"" +
    num(f.sy(scenario.goal.y)) + "\" r=\"" + num(0.5 * res * f.scale) + "\"/>\n";

  std::vector<PathSample> samples;
  if (result.found() && result.path.size() >= 2) {
    const std::span<const Pose2> robot(result.path.data(), result.path.size() - 1);
    drawFootprint(robot.back());
    std::vector<Point2> centers;
    centers.reserve(robot.size());
    for (const auto & p : robot) {
      centers.push_back(p.position());
    }
    try {
      samples = replayPath(scenario, robot, 0.05);
    } catch (const Error &) {
      samples.clear();
    }
    out += "<g class=\"tethers\">\n";
    if (!samples.empty() && options.tetherSnapshots > 0) {
      const int k = std::max(options.tetherSnapshots, 2);
      for (int i = 0; i < k; ++i) {
        const std::size_t idx = (samples.size() - 1) * static_cast<std::size_t>(i) /
          static_cast<std::size_t>(k - 1);
        const auto pts = tetherPolyline(samples[idx].tether, samples[idx].anchor);
        polyline(out, "tether", pointList(f, pts));
      }
    }
    out += "</g>\n";
    polyline(out, "path", pointList(f, centers));
  }

  // Relative angle strip chart, angles unrolled from the interval's lower bound.
  const AngleInterval & iv = scenario.sefInterval;
  const double lo = 0.0;
  const double hi = iv.width();
  const double vmin = lo - 0.5;
  const double vmax = hi + 0.5;
  const double plotH = options.stripHeight;
  auto py = [&](double v) {
      return stripTop + plotH * (1.0 - (std::clamp(v, vmin, vmax) - vmin) / (vmax - vmin));
    };
  out += "<g class=\"phi-chart\">\n";
  out += "<rect class=\"frame\" x=\"0\" y=\"" + num(stripTop) + "\" width=\"" + num(width) +
    "\" height=\"" + num(plotH) + "\"/>\n";
  for (double b : {lo, hi}) {
    out += "<line class=\"phi-bound\" x1=\"0\" y1=\"" + num(py(b)) + "\" x2=\"" + num(width) +
      "\" y2=\"" + num(py(b)) + "\"/>\n";
  }
  if (samples.size() >= 2) {
    const double total = samples.back().param > 0.0 ? samples.back().param : 1.0;
    std::string pts;
    for (const auto & s : samples) {
      if (std::isnan(s.phi)) {
        continue;
      }
      double v = wrapTo2Pi(s.phi - iv.lo);
      if (v > hi + 0.5 * (kTwoPi - hi)) {
        v -= kTwoPi;
      }
      if (!pts.empty()) {
        pts += ' ';
      }
      pts += num(width * s.param / total) + "," + num(py(v));
    }
    if (!pts.empty()) {
      polyline(out, "phi", pts);
    }
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace seftpp::app
