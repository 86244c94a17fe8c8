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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace meetwer {

enum class ErrorKind {
  kMixedSessionIds,
  kNegativeDuration,
  kMissingTimes,
  kComplexityGuard,
  kTooLarge,
  kSweepLimitExceeded,
  kInconsistentState,
  kMalformedDocument,
  kMissingRequiredKey,
  kNonNumericTime,
  kBadFieldCount,
  kInvalidArgument,
  kIo,
};

const char* to_string(ErrorKind kind);

// All data errors raised by the library carry a kind so that callers (the CLI
// in particular) can map them to exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  // `location` names the offending input position, e.g. "line 3".
  Error(ErrorKind kind, std::string location, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + location + ": " + message),
        kind_(kind),
        location_(std::move(location)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorKind kind_;
  std::string location_;
};

}  // namespace meetwer
