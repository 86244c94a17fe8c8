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
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "meetwer/seglst.hpp"

namespace meetwer {

// Sessions of one transcript file, keyed and ordered by session id.
using SessionMap = std::map<std::string, SegLst>;

enum class FileFormat { kSegLst, kStm };

std::optional<FileFormat> parse_file_format(std::string_view name);
// ".stm" is STM, ".json" is SegLST.
std::optional<FileFormat> format_from_extension(const std::filesystem::path& path);

// A JSON array of records with keys session_id, speaker, words and the
// optional start_time and end_time. Other keys are kept in Segment::extra.
SessionMap parse_seglst(std::string_view text);
std::string serialize_seglst(const SessionMap& sessions);

// "filename channel speaker begin end words..." per line; lines starting
// with ";;" are comments. The channel is kept as extra["channel"].
SessionMap parse_stm(std::string_view text);
std::string serialize_stm(const SessionMap& sessions);

SessionMap parse_sessions(std::string_view text, FileFormat format);
std::string serialize_sessions(const SessionMap& sessions, FileFormat format);

SessionMap read_sessions(const std::filesystem::path& path, FileFormat format);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

}  // namespace meetwer
