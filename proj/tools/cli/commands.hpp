// Copyright 2026 The qclone Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "qclone/core/types.hpp"

namespace qclone::cli {

struct RunConfig {
  int n = 2;
  double t = kPi / 4;
  int k = 1;
  std::uint64_t seed = 0;
  std::optional<std::string> psi;
  std::optional<int> target;
  std::string variant = "standard";
  std::optional<std::string> out;
  std::string format = "text";
  std::string what = "both";
  int points = 101;
  double tmax = kPi;
};

struct CommandResult {
  nlohmann::json report;
  bool passed = false;
};

CommandResult cmd_demo(const RunConfig& cfg);
CommandResult cmd_audit(const RunConfig& cfg);
CommandResult cmd_iterate(const RunConfig& cfg);
CommandResult cmd_variants(const RunConfig& cfg);
/// Writes circuit files into cfg.out (a directory) when given.
CommandResult cmd_compile(const RunConfig& cfg);
/// `csv` receives the sweep table.
CommandResult cmd_sweep(const RunConfig& cfg, std::string& csv);

/// Full command line. Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qclone::cli
