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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qclone {

enum class ErrorCode {
  kDimensionMismatch,
  kNotUnitary,
  kInvalidQubits,
  kCapacityExceeded,
  kNotNormalized,
  kNotPositive,
  kInvalidArgument,
  kPrecondition,
  kOddCloneCount,
  kUnsupportedAngle,
  kUnsupportedGate,
  kParse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kInvalidQubits: return "InvalidQubits";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kPrecondition: return "Precondition";
    case ErrorCode::kOddCloneCount: return "OddCloneCount";
    case ErrorCode::kUnsupportedAngle: return "UnsupportedAngle";
    case ErrorCode::kUnsupportedGate: return "UnsupportedGate";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by qclone carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qclone
