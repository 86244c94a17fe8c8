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

#include <algorithm>
#include <cmath>
#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "meetwer/error.hpp"
#include "meetwer/seglst.hpp"

using namespace meetwer;
using meetwer::testing::seg;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kIo;
}

}  // namespace

TEST_CASE("validate normalizes whitespace") {
  const SegLst in{{seg("spk1", "  a  b ", 0, 1)}};
  const SegLst out = validate(in);
  REQUIRE(out.size() == 1);
  CHECK(out.segments[0].words == "a b");
  CHECK(out.segments[0].speaker == "spk1");
}

TEST_CASE("validate sorts by begin time and keeps ties in input order") {
  const SegLst in{{seg("x", "late", 5, 6), seg("y", "first", 1, 2), seg("z", "tie", 1, 3)}};
  const SegLst out = validate(in);
  CHECK(out.segments[0].words == "first");
  CHECK(out.segments[1].words == "tie");
  CHECK(out.segments[2].words == "late");
}

TEST_CASE("validate rejects bad input") {
  CHECK(kind_of([] { validate({{seg("a", "x", 2, 1)}}); }) == ErrorKind::kNegativeDuration);
  CHECK(kind_of([] {
          validate({{seg("a", "x", 0, 1, "s1"), seg("a", "y", 1, 2, "s2")}});
        }) == ErrorKind::kMixedSessionIds);
}

TEST_CASE("validate keeps untimed segments in input order") {
  const SegLst in{{seg("a", "one"), seg("b", "two")}};
  CHECK(validate(in) == in);
}

TEST_CASE("validate is idempotent") {
  testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto inst = testing::random_instance(rng);
    const auto once = validate(inst.ref);
    CHECK(validate(once) == once);
  }
}

TEST_CASE("tokenize") {
  CHECK(tokenize(std::string_view("A B C")) == std::vector<std::string>{"A", "B", "C"});
  CHECK(tokenize(std::string_view("")).empty());
  CHECK(tokenize(std::string_view("hello")) == std::vector<std::string>{"hello"});
}

TEST_CASE("character count ignores whitespace and counts code points") {
  CHECK(character_count("ab") == 2);
  CHECK(character_count("\xc3\xa4x") == 2);
}

TEST_CASE("pseudo word timestamps") {
  const Segment s = seg("a", "ab c", 0, 6);
  const auto iv = pseudo_word_timestamps(s, TimestampMode::kCharacterBased);
  REQUIRE(iv.size() == 2);
  CHECK(iv[0].word == "ab");
  CHECK(iv[0].begin_time == 0.0);
  CHECK(iv[0].end_time == doctest::Approx(4.0));
  CHECK(iv[1].begin_time == doctest::Approx(4.0));
  CHECK(iv[1].end_time == 6.0);

  const auto pt = pseudo_word_timestamps(s, TimestampMode::kCharacterBasedPoints);
  CHECK(pt[0].begin_time == doctest::Approx(2.0));
  CHECK(pt[0].end_time == pt[0].begin_time);
  CHECK(pt[1].begin_time == doctest::Approx(5.0));

  const auto whole = pseudo_word_timestamps(seg("a", "x", 3, 7), TimestampMode::kCharacterBased);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].begin_time == 3.0);
  CHECK(whole[0].end_time == 7.0);

  const auto same = pseudo_word_timestamps(s, TimestampMode::kSegmentInterval);
  for (const auto& w : same) {
    CHECK(w.begin_time == 0.0);
    CHECK(w.end_time == 6.0);
  }
  CHECK(pseudo_word_timestamps(seg("a", "", 0, 3), TimestampMode::kCharacterBased).empty());
  CHECK(kind_of([] { pseudo_word_timestamps(seg("a", "x"), TimestampMode::kCharacterBased); }) ==
        ErrorKind::kMissingTimes);
}

TEST_CASE("character-based intervals tile the segment") {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    testing::InstanceShape shape;
    shape.max_words = 8;
    shape.vocabulary = 26;
    const auto side = testing::random_side(rng, shape, 3, 1, "x");
    for (const auto& s : side.segments) {
      const auto v = validate({{s}});
      const auto iv = pseudo_word_timestamps(v.segments[0], TimestampMode::kCharacterBased);
      if (iv.empty()) continue;
      CHECK(iv.front().begin_time == *s.start_time);
      CHECK(iv.back().end_time == *s.end_time);
      double total = 0.0;
      for (std::size_t k = 0; k < iv.size(); ++k) {
        CHECK(iv[k].begin_time <= iv[k].end_time);
        if (k) CHECK(iv[k].begin_time == iv[k - 1].end_time);
        total += iv[k].end_time - iv[k].begin_time;
      }
      CHECK(std::abs(total - (*s.end_time - *s.start_time)) < 1e-9);
    }
  }
}

TEST_CASE("explode to word level") {
  const auto out = explode_to_word_level(validate({{seg("spk1", "A B", 0, 2)}}),
                                         TimestampMode::kCharacterBased);
  REQUIRE(out.size() == 2);
  CHECK(out.segments[0] == seg("spk1", "A", 0, 1));
  CHECK(out.segments[1] == seg("spk1", "B", 1, 2));

  CHECK(explode_to_word_level(validate({{seg("spk1", "", 0, 1)}}), TimestampMode::kCharacterBased)
            .empty());

  const auto words = explode_to_word_level(validate(testing::two_stream_reference()),
                                         TimestampMode::kCharacterBased);
  CHECK(words.size() == 8);
  for (const auto& s : words.segments) CHECK(tokenize(s).size() == 1);
}

TEST_CASE("explode keeps the multiset of words") {
  testing::Rng rng(3);
  for (const auto mode : {TimestampMode::kSegmentInterval, TimestampMode::kCharacterBased,
                          TimestampMode::kCharacterBasedPoints}) {
    for (int i = 0; i < 100; ++i) {
      const auto side = validate(testing::random_instance(rng).ref);
      const auto out = explode_to_word_level(side, mode);
      std::vector<std::string> a;
      std::vector<std::string> b;
      for (const auto& s : side.segments) {
        for (auto& w : tokenize(s)) a.push_back(w);
      }
      for (const auto& s : out.segments) {
        for (auto& w : tokenize(s)) b.push_back(w);
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
      CHECK(validate(out) == out);
    }
  }
}

TEST_CASE("timestamp mode names") {
  for (const auto mode : {TimestampMode::kSegmentInterval, TimestampMode::kCharacterBased,
                          TimestampMode::kCharacterBasedPoints}) {
    CHECK(parse_timestamp_mode(to_string(mode)) == mode);
  }
  CHECK_FALSE(parse_timestamp_mode("words").has_value());
}
