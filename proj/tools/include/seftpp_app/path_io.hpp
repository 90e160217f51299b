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

#ifndef SEFTPP_APP__PATH_IO_HPP_
#define SEFTPP_APP__PATH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "seftpp/geometry.hpp"
#include "seftpp/planner.hpp"

namespace seftpp::app
{

/// One "x y theta" line per pose; the last line is the goal point.
std::string formatPath(const std::vector<Pose2> & path);
std::vector<Pose2> parsePath(std::string_view text);
std::vector<Pose2> readPathFile(const std::filesystem::path & file);
void writeTextFile(const std::filesystem::path & file, const std::string & contents);
std::string readTextFile(const std::filesystem::path & file);

/// Stats document with the counters expanded, generated, guaranteed_primitives,
/// checked_primitives and wall_time_ms.
std::string statsJson(const PlanResult & result, ExpansionStrategy strategy);

}  // namespace seftpp::app

#endif  // SEFTPP_APP__PATH_IO_HPP_
