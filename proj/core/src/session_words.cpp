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

#include "session_words.hpp"

namespace meetwer::internal {

std::vector<Token> SessionWords::gather(const std::vector<std::size_t>& word_indices) const {
  std::vector<Token> out;
  out.reserve(word_indices.size());
  for (const auto i : word_indices) out.push_back(tokens[i]);
  return out;
}

std::vector<std::size_t> SessionWords::words_of_label(const std::string& label) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < segment_words.size(); ++s) {
    if (segment_speaker[s] != label) continue;
    out.insert(out.end(), segment_words[s].begin(), segment_words[s].end());
  }
  return out;
}

std::vector<std::size_t> SessionWords::words_of_segments(
    const std::vector<std::size_t>& segments) const {
  std::vector<std::size_t> out;
  for (const auto s : segments) {
    out.insert(out.end(), segment_words[s].begin(), segment_words[s].end());
  }
  return out;
}

SessionWords flatten(const SegLst& validated, TimestampMode mode, bool need_times,
                     Vocabulary& vocab) {
  SessionWords out;
  out.labels = validated.labels();
  for (std::size_t s = 0; s < validated.segments.size(); ++s) {
    const auto& segment = validated.segments[s];
    out.segment_speaker.push_back(segment.speaker);
    auto& indices = out.segment_words.emplace_back();
    if (segment.has_times() || need_times) {
      for (auto& token : pseudo_word_timestamps(segment, mode)) {
        indices.push_back(out.info.size());
        out.tokens.push_back({vocab.intern(token.word), token.begin_time, token.end_time});
        out.info.push_back({std::move(token.word), token.begin_time, token.end_time,
                            segment.speaker, s, std::nullopt});
      }
    } else {
      for (auto& word : tokenize(segment)) {
        indices.push_back(out.info.size());
        out.tokens.push_back({vocab.intern(word), 0.0, 0.0});
        out.info.push_back(
            {std::move(word), std::nullopt, std::nullopt, segment.speaker, s, std::nullopt});
      }
    }
  }
  return out;
}

PairScore score_pair(const SessionWords& ref, const std::vector<std::size_t>& ref_words,
                     const SessionWords& hyp, const std::vector<std::size_t>& hyp_words,
                     const Collar& collar, std::optional<std::string> ref_label,
                     std::optional<std::string> hyp_label, Alignment& alignment) {
  const auto r = ref.gather(ref_words);
  const auto h = hyp.gather(hyp_words);
  auto result = align_tokens(r, h, CostScheme::unit(), collar);
  for (const auto& edit : result.trace) {
    Match m{edit.kind, std::nullopt, std::nullopt};
    if (edit.ref_index) m.ref_index = ref_words[*edit.ref_index];
    if (edit.hyp_index) m.hyp_index = hyp_words[*edit.hyp_index];
    alignment.matches.push_back(m);
  }
  return {std::move(ref_label), std::move(hyp_label), result.distance, result.counts};
}

}  // namespace meetwer::internal
