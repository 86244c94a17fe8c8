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
#include <random>
#include <string>
#include <vector>

#include "meetwer/io.hpp"
#include "meetwer/levenshtein.hpp"
#include "meetwer/seglst.hpp"

namespace meetwer::testing {

using Rng = std::mt19937_64;

struct InstanceShape {
  std::size_t max_ref_segments = 5;
  std::size_t max_hyp_segments = 5;
  std::size_t max_ref_labels = 3;
  std::size_t max_hyp_labels = 3;
  std::size_t max_words = 3;
  std::size_t vocabulary = 3;
  double max_begin = 10.0;
  double max_duration = 4.0;
  double empty_segment_rate = 0.1;
};

struct Instance {
  SegLst ref;
  SegLst hyp;
};

// Times are multiples of 0.5 s; segments of one side may overlap.
SegLst random_side(Rng& rng, const InstanceShape& shape, std::size_t max_segments,
                   std::size_t max_labels, const std::string& label_prefix);
Instance random_instance(Rng& rng, const InstanceShape& shape = {});

// Hypothesis made from the reference by random word edits and label noise.
Instance random_related_instance(Rng& rng, const InstanceShape& shape = {});

// Random collar: unbounded or one of a few small values.
Collar random_collar(Rng& rng);

// Timed tokens with nondecreasing begin times.
std::vector<Token> random_tokens(Rng& rng, std::size_t max_len, int vocabulary, double spread);

// Same labels with segment order shuffled among the given labels.
SegLst relabel(Rng& rng, const SegLst& seglst, std::size_t labels, const std::string& prefix);

// One long session: `streams` hypothesis streams covering `ref_words`
// reference words of `speakers` speakers with a few percent word errors.
Instance long_session(Rng& rng, std::size_t ref_words, std::size_t speakers, std::size_t streams);

// Parser fuzz corpus of `segments` segments over a few sessions. With
// `stm_compatible` every segment is timed, tokens avoid ";;" prefixes and
// the only extra key is the channel.
SessionMap random_corpus(Rng& rng, std::size_t segments, bool stm_compatible);

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

}  // namespace meetwer::testing
