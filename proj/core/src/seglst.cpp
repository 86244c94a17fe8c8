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

#include "meetwer/seglst.hpp"

#include <algorithm>
#include <set>

#include "meetwer/error.hpp"

namespace meetwer {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string normalize_whitespace(std::string_view words) {
  std::string out;
  out.reserve(words.size());
  for (const auto& token : tokenize(words)) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

}  // namespace

std::vector<std::string> SegLst::labels() const {
  std::set<std::string> unique;
  for (const auto& s : segments) unique.insert(s.speaker);
  return {unique.begin(), unique.end()};
}

std::size_t SegLst::word_count() const {
  std::size_t n = 0;
  for (const auto& s : segments) n += tokenize(s.words).size();
  return n;
}

bool SegLst::has_times() const {
  return std::all_of(segments.begin(), segments.end(),
                     [](const Segment& s) { return s.has_times(); });
}

std::string_view to_string(TimestampMode mode) {
  switch (mode) {
    case TimestampMode::kSegmentInterval: return "segment";
    case TimestampMode::kCharacterBased: return "character_based";
    case TimestampMode::kCharacterBasedPoints: return "character_based_points";
  }
  return "segment";
}

std::optional<TimestampMode> parse_timestamp_mode(std::string_view name) {
  if (name == "segment") return TimestampMode::kSegmentInterval;
  if (name == "character_based") return TimestampMode::kCharacterBased;
  if (name == "character_based_points") return TimestampMode::kCharacterBasedPoints;
  return std::nullopt;
}

SegLst validate(const SegLst& seglst) {
  SegLst out;
  out.segments.reserve(seglst.size());
  for (const auto& segment : seglst.segments) {
    if (!out.segments.empty() && segment.session_id != out.segments.front().session_id) {
      throw Error(ErrorKind::kMixedSessionIds,
                  "segments of sessions '" + out.segments.front().session_id + "' and '" +
                      segment.session_id + "' in one transcript");
    }
    if (segment.has_times() && *segment.end_time < *segment.start_time) {
      throw Error(ErrorKind::kNegativeDuration,
                  "segment of speaker '" + segment.speaker + "' in session '" +
                      segment.session_id + "' ends before it begins");
    }
    Segment cleaned = segment;
    cleaned.words = normalize_whitespace(segment.words);
    out.segments.push_back(std::move(cleaned));
  }
  const bool sortable = std::all_of(out.segments.begin(), out.segments.end(),
                                    [](const Segment& s) { return s.start_time.has_value(); });
  if (sortable) {
    std::stable_sort(out.segments.begin(), out.segments.end(),
                     [](const Segment& a, const Segment& b) { return *a.start_time < *b.start_time; });
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view words) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < words.size()) {
    while (i < words.size() && is_space(words[i])) ++i;
    const std::size_t start = i;
    while (i < words.size() && !is_space(words[i])) ++i;
    if (i > start) tokens.emplace_back(words.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string> tokenize(const Segment& segment) { return tokenize(segment.words); }

std::size_t character_count(std::string_view word) {
  std::size_t n = 0;
  for (const char c : word) {
    const auto byte = static_cast<unsigned char>(c);
    // UTF-8 continuation bytes do not start a new code point.
    if ((byte & 0xC0) != 0x80 && !is_space(c)) ++n;
  }
  return n;
}

std::vector<WordToken> pseudo_word_timestamps(const Segment& segment, TimestampMode mode) {
  if (!segment.has_times()) {
    throw Error(ErrorKind::kMissingTimes, "segment of speaker '" + segment.speaker +
                                              "' in session '" + segment.session_id +
                                              "' has no start/end time");
  }
  const double begin = *segment.start_time;
  const double end = *segment.end_time;
  const auto words = tokenize(segment.words);
  std::vector<WordToken> tokens;
  tokens.reserve(words.size());
  if (mode == TimestampMode::kSegmentInterval) {
    for (const auto& w : words) tokens.push_back({w, begin, end});
    return tokens;
  }

  std::size_t total = 0;
  for (const auto& w : words) total += character_count(w);
  if (total == 0) return tokens;

  const double duration = end - begin;
  std::size_t cumulative = 0;
  double left = begin;
  for (std::size_t i = 0; i < words.size(); ++i) {
    cumulative += character_count(words[i]);
    const double right =
        i + 1 == words.size()
            ? end
            : begin + duration * static_cast<double>(cumulative) / static_cast<double>(total);
    if (mode == TimestampMode::kCharacterBased) {
      tokens.push_back({words[i], left, right});
    } else {
      const double mid = left + (right - left) / 2.0;
      tokens.push_back({words[i], mid, mid});
    }
    left = right;
  }
  return tokens;
}

SegLst explode_to_word_level(const SegLst& seglst, TimestampMode mode) {
  SegLst out;
  for (const auto& segment : validate(seglst).segments) {
    if (!segment.has_times() && mode == TimestampMode::kSegmentInterval) {
      for (auto& w : tokenize(segment.words)) {
        Segment word = segment;
        word.words = std::move(w);
        out.segments.push_back(std::move(word));
      }
      continue;
    }
    for (auto& token : pseudo_word_timestamps(segment, mode)) {
      Segment word = segment;
      word.words = std::move(token.word);
      word.start_time = token.begin_time;
      word.end_time = token.end_time;
      out.segments.push_back(std::move(word));
    }
  }
  return validate(out);
}

}  // namespace meetwer
