// Copyright 2026 The meetwer Authors
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

#include "meetwer/error.hpp"

namespace meetwer {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMixedSessionIds: return "MixedSessionIds";
    case ErrorKind::kNegativeDuration: return "NegativeDuration";
    case ErrorKind::kMissingTimes: return "MissingTimes";
    case ErrorKind::kComplexityGuard: return "ComplexityGuard";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kSweepLimitExceeded: return "SweepLimitExceeded";
    case ErrorKind::kInconsistentState: return "InconsistentState";
    case ErrorKind::kMalformedDocument: return "MalformedDocument";
    case ErrorKind::kMissingRequiredKey: return "MissingRequiredKey";
    case ErrorKind::kNonNumericTime: return "NonNumericTime";
    case ErrorKind::kBadFieldCount: return "BadFieldCount";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace meetwer
