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

#include "hrg/error.hpp"

namespace hrg {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::kNotComposable: return "NotComposable";
    case ErrorCode::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kNonFunctorialCocycle: return "NonFunctorialCocycle";
    case ErrorCode::kNotASkewProduct: return "NotASkewProduct";
    case ErrorCode::kNotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::kAutomorphismsDontCommute: return "AutomorphismsDontCommute";
    case ErrorCode::kNotABijection: return "NotABijection";
    case ErrorCode::kNotYangBaxter: return "NotYangBaxter";
    case ErrorCode::kWindowTooSmall: return "WindowTooSmall";
    case ErrorCode::kWindowExhausted: return "WindowExhausted";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotSinglyConnected: return "NotSinglyConnected";
    case ErrorCode::kNoGrading: return "NoGrading";
    case ErrorCode::kShiftEquivalentDetected: return "ShiftEquivalentDetected";
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kTriellaAxiomViolation: return "TriellaAxiomViolation";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kShapeTooSmall: return "ShapeTooSmall";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace hrg
