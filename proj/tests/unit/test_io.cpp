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

#include <string>

#include "doctest.h"
#include "generators.hpp"
#include "meetwer/error.hpp"
#include "meetwer/io.hpp"

using namespace meetwer;

namespace {

Error parse_error(std::string_view text, FileFormat format) {
  try {
    parse_sessions(text, format);
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorKind::kIo, "");
}

}  // namespace

TEST_CASE("SegLST records") {
  const auto m = parse_seglst(R"([
    {"session_id": "s2", "speaker": "B", "words": "x  y", "start_time": 3, "end_time": 4.5},
    {"session_id": "s1", "speaker": "A", "words": "", "start_time": null, "end_time": null,
     "confidence": 0.5},
    {"session_id": "s2", "speaker": "A", "words": "z", "start_time": 1, "end_time": 2}
  ])");
  REQUIRE(m.size() == 2);
  const auto& s2 = m.at("s2").segments;
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].speaker == "A");
  CHECK(s2[1].words == "x y");
  CHECK(*s2[1].end_time == 4.5);
  const auto& s1 = m.at("s1").segments.at(0);
  CHECK(!s1.start_time);
  CHECK(s1.extra.at("confidence") == "0.5");
  CHECK(parse_seglst("[]").empty());
}

TEST_CASE("SegLST errors carry positions") {
  auto e = parse_error(R"([{"session_id": "s", "speaker": "A", "words": "a"},
                           {"session_id": "s", "speaker": "A"}])",
                       FileFormat::kSegLst);
  CHECK(e.kind() == ErrorKind::kMissingRequiredKey);
  CHECK(e.location() == "record 1");

  e = parse_error(R"([{"session_id": "s", "speaker": "A", "words": "a", "start_time": "1"}])",
                  FileFormat::kSegLst);
  CHECK(e.kind() == ErrorKind::kNonNumericTime);
  CHECK(e.location() == "record 0");

  e = parse_error(R"([{"session_id": "s", "speaker": "A", "words": "a", "start_time": 2,
                       "end_time": 1}])",
                  FileFormat::kSegLst);
  CHECK(e.kind() == ErrorKind::kNegativeDuration);
  CHECK(e.location() == "record 0");

  e = parse_error(R"([{"session_id": "s", "speaker": 3, "words": "a"}])", FileFormat::kSegLst);
  CHECK(e.kind() == ErrorKind::kMalformedDocument);
  CHECK(e.location() == "record 0");

  e = parse_error("[1]", FileFormat::kSegLst);
  CHECK(e.kind() == ErrorKind::kMalformedDocument);
  CHECK(e.location() == "record 0");

  e = parse_error("[{\"a\": 1},", FileFormat::kSegLst);
  CHECK(e.kind() == ErrorKind::kMalformedDocument);
  CHECK(e.location().rfind("byte ", 0) == 0);

  e = parse_error("{}", FileFormat::kSegLst);
  CHECK(e.kind() == ErrorKind::kMalformedDocument);
  CHECK(e.location() == "byte 0");
}

TEST_CASE("STM lines") {
  const auto m = parse_stm(
      ";; comment line\n"
      "rec1 1 spk1 0.5 2.25 hello   world\r\n"
      "\n"
      "rec1 A spk2 1 1.5\n");
  const auto& s = m.at("rec1").segments;
  REQUIRE(s.size() == 2);
  CHECK(s[0].words == "hello world");
  CHECK(*s[0].start_time == 0.5);
  CHECK(s[1].words.empty());
  CHECK(s[1].extra.at("channel") == "\"A\"");
  CHECK(serialize_stm(m) == "rec1 1 spk1 0.5 2.25 hello world\nrec1 A spk2 1 1.5\n");
}

TEST_CASE("STM errors carry line numbers") {
  auto e = parse_error("rec 1 spk 0\n", FileFormat::kStm);
  CHECK(e.kind() == ErrorKind::kBadFieldCount);
  CHECK(e.location() == "line 1");

  e = parse_error(";; c\nrec 1 spk 0 1 a\nrec 1 spk zero 1 a\n", FileFormat::kStm);
  CHECK(e.kind() == ErrorKind::kNonNumericTime);
  CHECK(e.location() == "line 3");

  e = parse_error("rec 1 spk 2 1 a\n", FileFormat::kStm);
  CHECK(e.kind() == ErrorKind::kNegativeDuration);
  CHECK(e.location() == "line 1");
}

TEST_CASE("STM cannot hold untimed segments") {
  const auto m = parse_seglst(R"([{"session_id": "s", "speaker": "A", "words": "a"}])");
  CHECK_THROWS_AS(serialize_stm(m), Error);
}

TEST_CASE("round trips reach a fixpoint") {
  testing::Rng rng(301);
  for (const auto format : {FileFormat::kSegLst, FileFormat::kStm}) {
    for (int n = 0; n < 20; ++n) {
      const auto raw = testing::random_corpus(rng, 50, format == FileFormat::kStm);
      const auto once = parse_sessions(serialize_sessions(raw, format), format);
      const auto text = serialize_sessions(once, format);
      const auto twice = parse_sessions(text, format);
      CHECK(once == twice);
      CHECK(serialize_sessions(twice, format) == text);
      std::size_t count = 0;
      for (const auto& [id, s] : twice) count += s.size();
      CHECK(count == 50);
    }
  }
}

TEST_CASE("numbers keep their value") {
  for (const double v : {0.0, 0.1, 1.0 / 3.0, 12345.678, 1e-7}) {
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("format names") {
  CHECK(parse_file_format("stm") == FileFormat::kStm);
  CHECK(parse_file_format("json") == FileFormat::kSegLst);
  CHECK(!parse_file_format("ctm"));
  CHECK(format_from_extension("a/b.stm") == FileFormat::kStm);
  CHECK(format_from_extension("b.json") == FileFormat::kSegLst);
  CHECK(!format_from_extension("b.txt"));
}

TEST_CASE("file errors name the path") {
  const auto path = std::filesystem::temp_directory_path() / "meetwer_test_io_bad.stm";
  write_file(path, "rec 1 spk 0 x\n");
  try {
    read_sessions(path, FileFormat::kStm);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNonNumericTime);
    CHECK(e.location() == path.string() + ": line 1");
  }
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path), Error);
}
