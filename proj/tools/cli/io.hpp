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
#include <optional>
#include <string>

#include <json.hpp>

#include "qclone/core/state_vector.hpp"

namespace qclone::cli {

inline constexpr int kReportDigits = 12;

/// Rounds every floating-point value to kReportDigits significant digits.
nlohmann::json rounded(const nlohmann::json& j);

/// Rounded, two-space indented, newline-terminated.
std::string dump_report(const nlohmann::json& j);

double round_significant(double x, int digits = kReportDigits);

/// Writes to `path.tmp` and renames over `path`.
void write_atomic(const std::string& path, const std::string& contents);

struct InputState {
  StateVector psi;
  std::string source;  ///< the named state, "amplitudes", or "haar:<seed>"
};

/// "0", "1", "+", "-", "+i", "-i", or "re0,im0,re1,im1" (normalized here). When absent,
/// a Haar-random state drawn from `seed`. Errors: kInvalidArgument.
InputState parse_input_state(const std::optional<std::string>& text, std::uint64_t seed);

nlohmann::json amplitudes_json(const StateVector& s);

}  // namespace qclone::cli
