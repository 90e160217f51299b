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

#include "seftpp_app/path_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace seftpp::app
{

std::string formatPath(const std::vector<Pose2> & path)
{
  std::string out;
  char buf[128];
  for (const auto & p : path) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p.x, p.y, p.theta);
    out += buf;
  }
  return out;
}

std::vector<Pose2> parsePath(std::string_view text)
{
  std::vector<Pose2> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::istringstream ls(line);
    Pose2 p;
    std::string extra;
    if (!(ls >> p.x >> p.y >> p.theta) || (ls >> extra)) {
      throw ParseError("expected \"x y theta\"", lineNo);
    }
    out.push_back(p);
  }
  if (out.size() < 2) {
    throw ParseError("path needs a start pose and a goal line", lineNo);
  }
  return out;
}

std::string readTextFile(const std::filesystem::path & file)
{
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + file.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Pose2> readPathFile(const std::filesystem::path & file)
{
  return parsePath(readTextFile(file));
}

void writeTextFile(const std::filesystem::path & file, const std::string & contents)
{
  std::ofstream out(file, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + file.string() + "'");
  }
  out << contents;
}

std::string statsJson(const PlanResult & result, ExpansionStrategy strategy)
{
  nlohmann::ordered_json j;
  j["status"] = toString(result.status);
  j["strategy"] = toString(strategy);
  j["expanded"] = result.stats.expanded;
  j["generated"] = result.stats.generated;
  j["guaranteed_primitives"] = result.stats.guaranteedPrimitives;
  j["checked_primitives"] = result.stats.checkedPrimitives;
  j["wall_time_ms"] = result.stats.wallTimeMs;
  if (result.found()) {
    j["path_cost"] = result.cost;
    j["h_signature"] = toString(result.h);
    j["path_poses"] = result.path.size();
  }
  return j.dump(2) + "\n";
}

}  // namespace seftpp::app
