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

#ifndef SEFTPP_APP__COMMANDS_HPP_
#define SEFTPP_APP__COMMANDS_HPP_

#include <filesystem>
#include <optional>
#include <ostream>

#include "seftpp/planner.hpp"

namespace seftpp::app
{

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNoPath = 2;

struct PlanOptions
{
  std::filesystem::path scenario;
  ExpansionStrategy strategy{ExpansionStrategy::Improved};
  std::optional<std::filesystem::path> svg;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> stats;
};

struct ValidateOptions
{
  std::filesystem::path scenario;
  std::filesystem::path path;
  double step{0.01};
};

struct BenchOptions
{
  std::filesystem::path config;
  std::filesystem::path out;
};

/// 0 path found, 2 no path (or expansion limit), 1 input error.
int runPlan(const PlanOptions & options, std::ostream & out, std::ostream & err);
/// 0 path valid, 2 path violates a condition, 1 input error.
int runValidate(const ValidateOptions & options, std::ostream & out, std::ostream & err);
/// 0 when the table was written (failed cells are marked in it), 1 input error.
int runBenchCommand(const BenchOptions & options, std::ostream & out, std::ostream & err);

/// Parses the command line and dispatches to a subcommand.
int runCli(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

}  // namespace seftpp::app

#endif  // SEFTPP_APP__COMMANDS_HPP_
