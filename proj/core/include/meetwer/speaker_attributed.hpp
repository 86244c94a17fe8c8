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
#include "meetwer/seglst.hpp"

namespace meetwer {

// One-to-one mapping between reference speakers and hypothesis labels. A
// missing side (std::nullopt) is the dummy label with an empty transcript.
struct SpeakerMapping {
  std::vector<std::pair<std::optional<std::string>, std::optional<std::string>>> pairs;

  std::optional<std::string> hypothesis_for(const std::string& reference) const;
  std::optional<std::string> reference_for(const std::string& hypothesis) const;
};

struct SpeakerAttributedResult {
  Cost distance = 0;
  ErrorCounts counts;
  SpeakerMapping mapping;
  std::vector<PairScore> pairs;
  Alignment alignment;
};

// Plain WER of one session: all segments of each side concatenated in
// canonical order, speaker labels ignored.
SpeakerAttributedResult concatenated_wer(const SegLst& ref, const SegLst& hyp,
                                         const WordTimestamps& timestamps = {});

// cpWER, or tcpWER for a bounded collar. Among mappings with equal distance
// the lexicographically smallest (reference label, hypothesis label) pairing
// wins.
SpeakerAttributedResult cp_wer(const SegLst& ref, const SegLst& hyp,
                               const Collar& collar = Collar::unbounded(),
                               const WordTimestamps& timestamps = {});

struct DerCounts {
  double missed = 0.0;
  double false_alarm = 0.0;
  double confusion = 0.0;
  double total_reference_activity = 0.0;

  std::optional<double> der() const;
};

struct DerResult {
  DerCounts counts;
  SpeakerMapping mapping;
};

// Speaker activity timelines are the unions of each label's segment
// intervals. The mapping minimizes the total symmetric difference of mapped
// timelines; no collar is applied. Counts split each instant into missed,
// false alarm and confusion time by the numbers of active labels.
DerResult der(const SegLst& ref, const SegLst& hyp);

// WER under the DER-optimal speaker mapping.
SpeakerAttributedResult da_wer(const SegLst& ref, const SegLst& hyp,
                               const WordTimestamps& timestamps = {});

}  // namespace meetwer
