// Copyright 2026 The eeaowf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eeaowf/error.h"

#include <string>

namespace eeaowf {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPrime:
      return "InvalidPrime";
    case ErrorCode::kZeroInverse:
      return "ZeroInverse";
    case ErrorCode::kModulusMismatch:
      return "ModulusMismatch";
    case ErrorCode::kDivisionByZeroPolynomial:
      return "DivisionByZeroPolynomial";
    case ErrorCode::kBothZero:
      return "BothZero";
    case ErrorCode::kInvalidRootSet:
      return "InvalidRootSet";
    case ErrorCode::kNotCoprime:
      return "NotCoprime";
    case ErrorCode::kMalformedKey:
      return "MalformedKey";
    case ErrorCode::kSearchSpaceTooLarge:
      return "SearchSpaceTooLarge";
    case ErrorCode::kInvalidBitLength:
      return "InvalidBitLength";
    case ErrorCode::kKeyAlreadyUsed:
      return "KeyAlreadyUsed";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kMalformedFile:
      return "MalformedFile";
    case ErrorCode::kUnsupportedVersion:
      return "UnsupportedVersion";
    case ErrorCode::kInvariantViolation:
      return "InvariantViolation";
  }
  return "Unknown";
}

namespace {

std::string Describe(ErrorCode code, const std::string& what,
                     std::size_t line) {
  std::string out(ErrorCodeName(code));
  if (line != 0) {
    out += " at line " + std::to_string(line);
  }
  out += ": ";
  out += what;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& what, std::size_t line)
    : std::runtime_error(Describe(code, what, line)), code_(code), line_(line) {}

}  // namespace eeaowf
