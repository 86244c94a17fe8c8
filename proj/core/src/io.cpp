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

#include "meetwer/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "meetwer/error.hpp"

namespace meetwer {
namespace {

using Json = nlohmann::ordered_json;

std::string record_at(std::size_t index) { return "record " + std::to_string(index); }
std::string line_at(std::size_t line) { return "line " + std::to_string(line); }

void check_order(const Segment& s, const std::string& where) {
  if (s.has_times() && *s.end_time < *s.start_time) {
    throw Error(ErrorKind::kNegativeDuration, where,
                "end_time " + format_number(*s.end_time) + " is before start_time " +
                    format_number(*s.start_time));
  }
}

SessionMap group(std::vector<Segment> segments) {
  SessionMap raw;
  for (auto& s : segments) raw[s.session_id].segments.push_back(std::move(s));
  SessionMap out;
  for (auto& [id, seglst] : raw) out.emplace(id, validate(seglst));
  return out;
}

std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

std::optional<double> json_time(const Json& record, const char* key, std::size_t index) {
  const auto it = record.find(key);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) {
    throw Error(ErrorKind::kNonNumericTime, record_at(index),
                std::string("'") + key + "' must be a number, got " + it->dump());
  }
  return it->get<double>();
}

std::string json_string(const Json& record, const char* key, std::size_t index) {
  const auto it = record.find(key);
  if (it == record.end()) {
    throw Error(ErrorKind::kMissingRequiredKey, record_at(index),
                std::string("missing required key '") + key + "'");
  }
  if (!it->is_string()) {
    throw Error(ErrorKind::kMalformedDocument, record_at(index),
                std::string("'") + key + "' must be a string, got " + it->dump());
  }
  return it->get<std::string>();
}

bool is_known_key(const std::string& key) {
  return key == "session_id" || key == "speaker" || key == "words" || key == "start_time" ||
         key == "end_time";
}

std::string json_string_value(const std::string& raw) { return Json(raw).dump(); }

std::string channel_of(const Segment& s) {
  const auto it = s.extra.find("channel");
  if (it == s.extra.end()) return "1";
  const Json j = Json::parse(it->second, nullptr, false);
  if (j.is_string()) return j.get<std::string>();
  if (j.is_discarded()) return it->second;
  return j.dump();
}

void check_stm_field(const std::string& value, const char* field, const Segment& s) {
  if (value.empty() || value.find_first_of(" \t\r\n") != std::string::npos ||
      value.rfind(";;", 0) == 0) {
    throw Error(ErrorKind::kInvalidArgument, "session '" + s.session_id + "'",
                std::string("STM ") + field + " '" + value +
                    "' must be non-empty, without whitespace and not start with ';;'");
  }
}

}  // namespace

std::optional<FileFormat> parse_file_format(std::string_view name) {
  if (name == "seglst" || name == "json") return FileFormat::kSegLst;
  if (name == "stm") return FileFormat::kStm;
  return std::nullopt;
}

std::optional<FileFormat> format_from_extension(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") return FileFormat::kSegLst;
  if (ext == ".stm") return FileFormat::kStm;
  return std::nullopt;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error(ErrorKind::kInvalidArgument, "cannot format number");
  return std::string(buf, ptr);
}

SessionMap parse_seglst(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kMalformedDocument, "byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorKind::kMalformedDocument, "byte 0",
                std::string("expected an array of records, got ") + doc.type_name());
  }
  std::vector<Segment> segments;
  segments.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const Json& record = doc[i];
    if (!record.is_object()) {
      throw Error(ErrorKind::kMalformedDocument, record_at(i),
                  std::string("expected an object, got ") + record.type_name());
    }
    Segment s;
    s.session_id = json_string(record, "session_id", i);
    s.speaker = json_string(record, "speaker", i);
    s.words = json_string(record, "words", i);
    s.start_time = json_time(record, "start_time", i);
    s.end_time = json_time(record, "end_time", i);
    for (const auto& [key, value] : record.items()) {
      if (!is_known_key(key)) s.extra.emplace(key, value.dump());
    }
    check_order(s, record_at(i));
    segments.push_back(std::move(s));
  }
  return group(std::move(segments));
}

std::string serialize_seglst(const SessionMap& sessions) {
  Json doc = Json::array();
  for (const auto& [id, seglst] : sessions) {
    for (const auto& s : seglst.segments) {
      Json r = Json::object();
      r["session_id"] = s.session_id;
      r["speaker"] = s.speaker;
      r["words"] = s.words;
      if (s.start_time) r["start_time"] = *s.start_time;
      if (s.end_time) r["end_time"] = *s.end_time;
      for (const auto& [key, raw] : s.extra) {
        if (is_known_key(key)) continue;
        Json value = Json::parse(raw, nullptr, false);
        r[key] = value.is_discarded() ? Json(raw) : std::move(value);
      }
      doc.push_back(std::move(r));
    }
  }
  return doc.dump(1, '\t') + "\n";
}

SessionMap parse_stm(std::string_view text) {
  std::vector<Segment> segments;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (fields.empty() || fields[0].rfind(";;", 0) == 0) continue;
    if (fields.size() < 5) {
      throw Error(ErrorKind::kBadFieldCount, line_at(line_no),
                  "expected at least 5 fields (filename channel speaker begin end), got " +
                      std::to_string(fields.size()));
    }
    Segment s;
    s.session_id = std::string(fields[0]);
    s.extra.emplace("channel", json_string_value(std::string(fields[1])));
    s.speaker = std::string(fields[2]);
    s.start_time = parse_double(fields[3]);
    s.end_time = parse_double(fields[4]);
    if (!s.start_time || !s.end_time) {
      throw Error(ErrorKind::kNonNumericTime, line_at(line_no),
                  "begin/end must be numbers, got '" + std::string(fields[3]) + "' '" +
                      std::string(fields[4]) + "'");
    }
    for (std::size_t f = 5; f < fields.size(); ++f) {
      if (f > 5) s.words += ' ';
      s.words += fields[f];
    }
    check_order(s, line_at(line_no));
    segments.push_back(std::move(s));
  }
  return group(std::move(segments));
}

std::string serialize_stm(const SessionMap& sessions) {
  std::ostringstream out;
  for (const auto& [id, seglst] : sessions) {
    for (const auto& s : seglst.segments) {
      if (!s.has_times()) {
        throw Error(ErrorKind::kMissingTimes, "session '" + s.session_id + "'",
                    "STM needs begin and end times for speaker '" + s.speaker + "'");
      }
      const std::string channel = channel_of(s);
      check_stm_field(s.session_id, "filename", s);
      check_stm_field(channel, "channel", s);
      check_stm_field(s.speaker, "speaker", s);
      out << s.session_id << ' ' << channel << ' ' << s.speaker << ' '
          << format_number(*s.start_time) << ' ' << format_number(*s.end_time);
      if (!s.words.empty()) out << ' ' << s.words;
      out << '\n';
    }
  }
  return out.str();
}

SessionMap parse_sessions(std::string_view text, FileFormat format) {
  return format == FileFormat::kStm ? parse_stm(text) : parse_seglst(text);
}

std::string serialize_sessions(const SessionMap& sessions, FileFormat format) {
  return format == FileFormat::kStm ? serialize_stm(sessions) : serialize_seglst(sessions);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, path.string(), "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, path.string(), "cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::kIo, path.string(), "write failed");
}

SessionMap read_sessions(const std::filesystem::path& path, FileFormat format) {
  const std::string text = read_file(path);
  try {
    return parse_sessions(text, format);
  } catch (const Error& e) {
    const std::string where =
        e.location().empty() ? path.string() : path.string() + ": " + e.location();
    std::string what = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
    if (!e.location().empty() && what.rfind(e.location() + ": ", 0) == 0) {
      what = what.substr(e.location().size() + 2);
    }
    throw Error(e.kind(), where, what);
  }
}

}  // namespace meetwer
