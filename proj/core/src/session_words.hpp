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

#include "meetwer/alignment.hpp"
#include "meetwer/levenshtein.hpp"
#include "meetwer/seglst.hpp"

namespace meetwer::internal {

// Flattened words of one validated session side.
struct SessionWords {
  std::vector<WordInfo> info;
  std::vector<Token> tokens;
  std::vector<std::vector<std::size_t>> segment_words;
  std::vector<std::string> segment_speaker;
  std::vector<std::string> labels;  // sorted distinct speakers

  std::vector<Token> gather(const std::vector<std::size_t>& word_indices) const;
  // Word indices of all segments of `label`, in canonical order.
  std::vector<std::size_t> words_of_label(const std::string& label) const;
  std::vector<std::size_t> words_of_segments(const std::vector<std::size_t>& segments) const;
};

// Times are required (and checked) when `need_times` is set; otherwise timed
// segments still get pseudo word times for display and untimed ones stay
// untimed.
SessionWords flatten(const SegLst& validated, TimestampMode mode, bool need_times,
                     Vocabulary& vocab);

// Aligns `ref_words` of `ref` against `hyp_words` of `hyp` and appends the
// matches, translated to session word indices, to `alignment`.
PairScore score_pair(const SessionWords& ref, const std::vector<std::size_t>& ref_words,
                     const SessionWords& hyp, const std::vector<std::size_t>& hyp_words,
                     const Collar& collar, std::optional<std::string> ref_label,
                     std::optional<std::string> hyp_label, Alignment& alignment);

}  // namespace meetwer::internal
