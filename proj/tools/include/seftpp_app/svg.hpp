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

#ifndef SEFTPP_APP__SVG_HPP_
#define SEFTPP_APP__SVG_HPP_

#include <string>

#include "seftpp/planner.hpp"
#include "seftpp/scenario.hpp"

namespace seftpp::app
{

struct SvgOptions
{
  /// Pixels per world unit.
  double scale{8.0};
  /// Tether snapshots drawn along the path (start and end included).
  int tetherSnapshots{6};
  double stripHeight{120.0};
};

/**
 * @brief Renders map, base, footprints, path, tether snapshots and a relative angle strip chart
 * Output depends only on the inputs. The path is exactly one polyline with class "path".
 */
std::string renderSvg(const Scenario & scenario, const PlanResult & result,
  const SvgOptions & options = {});

}  // namespace seftpp::app

#endif  // SEFTPP_APP__SVG_HPP_
