// Copyright 2026 The hrg Authors
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

namespace hrg {

// Numeric values are part of the C ABI (see hrg.h); append only.
enum class ErrorCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kColorOutOfRange = 2,
  kNotComposable = 3,
  kDegreeOutOfRange = 4,
  kUnknownVertex = 5,
  kUnknownName = 6,
  kNonFunctorialCocycle = 7,
  kNotASkewProduct = 8,
  kNotAnAutomorphism = 9,
  kAutomorphismsDontCommute = 10,
  kNotABijection = 11,
  kNotYangBaxter = 12,
  kWindowTooSmall = 13,
  kWindowExhausted = 14,
  kDisconnected = 15,
  kNotSinglyConnected = 16,
  kNoGrading = 17,
  kShiftEquivalentDetected = 18,
  kUnsupportedOrder = 19,
  kTriellaAxiomViolation = 20,
  kShapeMismatch = 21,
  kShapeTooSmall = 22,
  kIo = 23,
  kInternal = 99,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  /// The message without the code prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hrg
