// Copyright 2026 The mwkc Authors
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

#ifndef MWKC_CLI_HPP
#define MWKC_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <string>

#include "mwkc/schedule.hpp"

namespace mwkc::cli {

enum class Command { kValidate, kCliques, kNetwork, kSolve, kCheck, kOracle };
enum class DumpFormat { kJson, kDot };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::kSolve;
  std::string input;
  //! Inferred from the input extension when unset (.json, else CSV).
  std::optional<ScheduleFormat> format;
  std::optional<int> k;
  std::set<std::string> excluded;
  std::optional<std::string> output;
  DumpFormat dump = DumpFormat::kJson;
  //! Solution document for `check`.
  std::string solution;
  std::size_t oracle_limit = 20;
  bool validate_paths = false;
};

//! Executes one command. JSON goes to `out` (or the output file), the
//! session table and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

//! Parses argv into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace mwkc::cli

#endif  // MWKC_CLI_HPP
