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

#include "fixtures.hpp"

#include <utility>

namespace meetwer::testing {

Segment seg(std::string speaker, std::string words, std::optional<double> begin,
            std::optional<double> end, std::string session) {
  Segment s;
  s.session_id = std::move(session);
  s.speaker = std::move(speaker);
  s.words = std::move(words);
  s.start_time = begin;
  s.end_time = end;
  return s;
}

SegLst two_stream_reference() {
  return {{seg("spk1", "A B C", 1, 4), seg("spk3", "G", 4, 5), seg("spk2", "E F", 5, 7),
           seg("spk1", "D", 7, 8), seg("spk3", "H", 8, 9)}};
}

SegLst two_stream_hypothesis() {
  return {{seg("stream2", "A B", 1, 3), seg("stream1", "C D", 3, 7), seg("stream2", "E", 5, 6),
           seg("stream1", "F H", 7, 9)}};
}

SegLst swap_reference() { return {{seg("spk1", "a b", 1, 3), seg("spk2", "c d", 2, 4)}}; }

SegLst swap_hypothesis() {
  return {{seg("s1", "a", 1, 1.5), seg("s2", "c", 2, 2.5), seg("s2", "b", 3, 3.5),
           seg("s1", "d", 4, 4.5)}};
}

}  // namespace meetwer::testing
