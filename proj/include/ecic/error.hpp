// Copyright 2026 The Authors.
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

namespace ecic {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kDemandInSideInfo,
  kIndexOutOfRange,
  kUnknownLabel,
  kDependentSet,
  kGroundSetTooLarge,
  kZeroColumn,
  kMalformedCertificate,
  kPreconditionViolated,
  kSearchSpaceTooLarge,
  kParse,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kDemandInSideInfo: return "demand-in-side-info";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kUnknownLabel: return "unknown-label";
    case ErrorCode::kDependentSet: return "dependent-set";
    case ErrorCode::kGroundSetTooLarge: return "ground-set-too-large";
    case ErrorCode::kZeroColumn: return "zero-column";
    case ErrorCode::kMalformedCertificate: return "malformed-certificate";
    case ErrorCode::kPreconditionViolated: return "precondition-violated";
    case ErrorCode::kSearchSpaceTooLarge: return "search-space-too-large";
    case ErrorCode::kParse: return "parse-error";
  }
  return "unknown";
}

// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ecic
