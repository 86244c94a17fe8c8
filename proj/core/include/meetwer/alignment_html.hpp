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

#include <filesystem>
#include <string>

#include "meetwer/report.hpp"

namespace meetwer {

// The alignment document of every session:
// [{session_id, ref_words: [{word, begin, end, speaker}],
//   hyp_words: [{word, begin, end, stream, assigned_speaker}],
//   matches: [{kind, ref_index?, hyp_index?}]}]
std::string alignment_document_json(const Report& report);

// True when the interactive viewer was inlined at build time.
bool viewer_available();

// Self-contained page with the alignment document embedded. Without the
// viewer a static table per session is rendered instead.
std::string emit_alignment_html(const Report& report);
void emit_alignment_html(const Report& report, const std::filesystem::path& out_path);

}  // namespace meetwer
