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

#ifndef SEFTPP__HOMOTOPY_HPP_
#define SEFTPP__HOMOTOPY_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seftpp/geometry.hpp"

namespace seftpp
{

/**
 * @brief Vertical half-line starting at an obstacle representative and pointing in +y
 */
struct Ray
{
  int id{0};
  Point2 origin;
};

/**
 * @brief One signed ray crossing. sign +1 means the path crossed with increasing x.
 */
struct Letter
{
  int ray{0};
  int sign{1};

  friend bool operator==(const Letter &, const Letter &) = default;
};

/**
 * @brief h-signature word over ray crossings, kept in reduced form by appendReduce
 */
struct HWord
{
  std::vector<Letter> letters;

  bool empty() const {return letters.empty();}
  friend bool operator==(const HWord &, const HWord &) = default;
};

/**
 * @brief Ray crossings of segment p->q in order along the segment
 * A point with x >= ray x belongs to the +x side, so consecutive segments
 * count a crossing exactly once.
 */
std::vector<Letter> segmentCrossings(Point2 p, Point2 q, std::span<const Ray> rays);

/// Appends crossings of every segment of a polyline.
std::vector<Letter> polylineCrossings(std::span<const Point2> pts, std::span<const Ray> rays);

HWord appendReduce(const HWord & w, std::span<const Letter> letters);
HWord reduce(std::span<const Letter> letters);
HWord inverse(const HWord & w);
bool hEquals(const HWord & a, const HWord & b);

/// Text form: "r2 r3", "r1^-1"; the empty word is "".
std::string toString(const HWord & w);
/// Parses the text form (also accepts "^+1" and unreduced input, which is reduced).
HWord parseHWord(std::string_view text);

}  // namespace seftpp

#endif  // SEFTPP__HOMOTOPY_HPP_
