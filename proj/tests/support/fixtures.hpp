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

#include "meetwer/seglst.hpp"

namespace meetwer::testing {

Segment seg(std::string speaker, std::string words, std::optional<double> begin = std::nullopt,
            std::optional<double> end = std::nullopt, std::string session = "s");

// Five reference utterances of three speakers and four hypothesis segments
// on two output streams; 8 reference words, 7 hypothesis words.
SegLst two_stream_reference();
SegLst two_stream_hypothesis();

// Two reference speakers with one utterance each; the hypothesis crosses
// the second words over.
SegLst swap_reference();
SegLst swap_hypothesis();

}  // namespace meetwer::testing
