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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meetwer/alignment.hpp"
#include "meetwer/levenshtein.hpp"

namespace meetwer {

// How a metric resolved speakers for one session: a label pairing (cpWER,
// DA-WER), one label per reassigned segment (ORC, MIMO, DI-cp), or nothing
// (plain WER).
struct ReportAssignment {
  enum class Kind { kNone, kMapping, kSegmentLabels };
  Kind kind = Kind::kNone;
  std::vector<std::pair<std::optional<std::string>, std::optional<std::string>>> mapping;
  std::vector<std::optional<std::string>> segment_labels;
};

struct SessionReport {
  std::string session_id;
  ErrorCounts counts;
  ReportAssignment assignment;
  Alignment alignment;
};

struct Report {
  std::string metric;
  std::vector<SessionReport> sessions;  // sorted by session id

  // Micro average: counts summed over sessions.
  ErrorCounts total() const;
};

// {error_rate, errors, length, insertions, deletions, substitutions, correct,
// assignment} plus `sessions` with the same keys per session when
// `per_session` is set. error_rate is null for an empty reference.
std::string report_to_json(const Report& report, bool per_session);

}  // namespace meetwer
