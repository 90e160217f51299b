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

#include "seftpp/homotopy.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace seftpp
{

std::vector<Letter> segmentCrossings(Point2 p, Point2 q, std::span<const Ray> rays)
{
  struct Hit
  {
    double t;
    Letter letter;
  };
  std::vector<Hit> hits;
  for (const auto & ray : rays) {
    const bool pRight = p.x >= ray.origin.x;
    const bool qRight = q.x >= ray.origin.x;
    if (pRight == qRight) {
      continue;
    }
    const double t = (ray.origin.x - p.x) / (q.x - p.x);
    const double y = p.y + t * (q.y - p.y);
    if (y > ray.origin.y) {
      hits.push_back({t, Letter{ray.id, qRight ? 1 : -1}});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit & a, const Hit & b) {return a.t < b.t;});
  std::vector<Letter> out;
  out.reserve(hits.size());
  for (const auto & h : hits) {
    out.push_back(h.letter);
  }
  return out;
}

std::vector<Letter> polylineCrossings(std::span<const Point2> pts, std::span<const Ray> rays)
{
  std::vector<Letter> out;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto seg = segmentCrossings(pts[i - 1], pts[i], rays);
    out.insert(out.end(), seg.begin(), seg.end());
  }
  return out;
}

HWord appendReduce(const HWord & w, std::span<const Letter> letters)
{
  HWord out = w;
  for (const auto & l : letters) {
    if (!out.letters.empty() && out.letters.back().ray == l.ray &&
      out.letters.back().sign == -l.sign)
    {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

HWord reduce(std::span<const Letter> letters)
{
  return appendReduce(HWord{}, letters);
}

HWord inverse(const HWord & w)
{
  HWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back({it->ray, -it->sign});
  }
  return out;
}

bool hEquals(const HWord & a, const HWord & b)
{
  return a.letters == b.letters;
}

std::string toString(const HWord & w)
{
  std::string out;
  for (const auto & l : w.letters) {
    if (!out.empty()) {
      out += ' ';
    }
    out += 'r';
    out += std::to_string(l.ray);
    if (l.sign < 0) {
      out += "^-1";
    }
  }
  return out;
}

HWord parseHWord(std::string_view text)
{
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || token[0] != 'r') {
      throw Error("h-word: bad token '" + token + "'");
    }
    const auto caret = token.find('^');
    const std::string_view idPart = std::string_view(token).substr(1, caret == std::string::npos ?
        std::string::npos : caret - 1);
    int id = 0;
    const auto res = std::from_chars(idPart.data(), idPart.data() + idPart.size(), id);
    if (res.ec != std::errc() || res.ptr != idPart.data() + idPart.size()) {
      throw Error("h-word: bad ray id in '" + token + "'");
    }
    int sign = 1;
    if (caret != std::string::npos) {
      const std::string exponent = token.substr(caret + 1);
      if (exponent == "-1") {
        sign = -1;
      } else if (exponent != "1" && exponent != "+1") {
        throw Error("h-word: bad exponent in '" + token + "'");
      }
    }
    letters.push_back({id, sign});
  }
  return reduce(letters);
}

}  // namespace seftpp
