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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace meetwer {

// One contiguous single-speaker speech region. `speaker` is the reference
// speaker on the reference side and the output stream (or estimated speaker)
// on the hypothesis side.
struct Segment {
  std::string session_id;
  std::string speaker;
  std::string words;
  std::optional<double> start_time;
  std::optional<double> end_time;
  // Keys not known to this library, kept as serialized JSON values so that
  // files round-trip without loss.
  std::map<std::string, std::string> extra;

  bool has_times() const { return start_time.has_value() && end_time.has_value(); }
  bool operator==(const Segment&) const = default;
};

// All segments of one session, in canonical order once validated.
struct SegLst {
  std::vector<Segment> segments;

  std::size_t size() const { return segments.size(); }
  bool empty() const { return segments.empty(); }

  // Distinct speaker labels in sorted order.
  std::vector<std::string> labels() const;
  // Number of words over all segments.
  std::size_t word_count() const;
  bool has_times() const;

  bool operator==(const SegLst&) const = default;
};

enum class TimestampMode {
  kSegmentInterval,      // every word inherits the segment interval
  kCharacterBased,       // interval length proportional to character count
  kCharacterBasedPoints  // midpoint of the character-based interval
};

std::string_view to_string(TimestampMode mode);
std::optional<TimestampMode> parse_timestamp_mode(std::string_view name);

// Per-side timestamp modes. The defaults use points on the hypothesis side so
// that a system cannot gain matches by stretching single-word segments.
struct WordTimestamps {
  TimestampMode reference = TimestampMode::kCharacterBased;
  TimestampMode hypothesis = TimestampMode::kCharacterBasedPoints;
};

struct WordToken {
  std::string word;
  double begin_time = 0.0;
  double end_time = 0.0;

  bool operator==(const WordToken&) const = default;
};

// Normalizes whitespace, checks times and session ids, and sorts segments
// stably by start time. Segments without a start time keep their input
// position relative to each other; if any segment lacks a start time the
// input order is kept as is.
SegLst validate(const SegLst& seglst);

std::vector<std::string> tokenize(std::string_view words);
std::vector<std::string> tokenize(const Segment& segment);

// Number of non-whitespace UTF-8 code points.
std::size_t character_count(std::string_view word);

// Throws Error(kMissingTimes) when the segment has no interval.
std::vector<WordToken> pseudo_word_timestamps(const Segment& segment, TimestampMode mode);

// Replaces every segment by one single-word segment per word. Untimed
// segments are only accepted in kSegmentInterval mode, where the words stay
// untimed.
SegLst explode_to_word_level(const SegLst& seglst, TimestampMode mode);

}  // namespace meetwer
