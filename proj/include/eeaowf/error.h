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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eeaowf {

enum class ErrorCode {
  kInvalidPrime,
  kZeroInverse,
  kModulusMismatch,
  kDivisionByZeroPolynomial,
  kBothZero,
  kInvalidRootSet,
  kNotCoprime,
  kMalformedKey,
  kSearchSpaceTooLarge,
  kInvalidBitLength,
  kKeyAlreadyUsed,
  kLengthMismatch,
  kMalformedFile,
  kUnsupportedVersion,
  kInvariantViolation,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `line()` is nonzero only for file
// parse errors and holds the 1-based offending line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

#define EEAOWF_ENFORCE(cond, code, msg)              \
  do {                                               \
    if (!(cond)) {                                   \
      throw ::eeaowf::Error(::eeaowf::code, (msg));  \
    }                                                \
  } while (false)

}  // namespace eeaowf
