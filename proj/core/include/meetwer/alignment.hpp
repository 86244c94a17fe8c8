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
#include <optional>
#include <string>
#include <vector>

#include "meetwer/levenshtein.hpp"

namespace meetwer {

// A word of one side of a session, in canonical segment order.
struct WordInfo {
  std::string word;
  std::optional<double> begin_time;
  std::optional<double> end_time;
  std::string speaker;  // reference speaker or hypothesis stream
  std::size_t segment = 0;
  // Reference speaker a hypothesis word was attributed to by the metric.
  std::optional<std::string> assigned_speaker;
};

// Edit with indices into Alignment::ref_words / hyp_words.
using Match = Edit;

// Everything a word-level visualization of one scored session needs.
struct Alignment {
  std::vector<WordInfo> ref_words;
  std::vector<WordInfo> hyp_words;
  std::vector<Match> matches;
};

// Score of one (reference, hypothesis) word-sequence pair inside a metric.
// An empty label stands for the dummy speaker or stream.
struct PairScore {
  std::optional<std::string> reference;
  std::optional<std::string> hypothesis;
  Cost distance = 0;
  ErrorCounts counts;
};

}  // namespace meetwer
