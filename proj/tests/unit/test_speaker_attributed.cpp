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

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "meetwer/error.hpp"
#include "meetwer/speaker_attributed.hpp"
#include "oracles.hpp"

using namespace meetwer;
using meetwer::testing::seg;

namespace {

void check_consistent(const SpeakerAttributedResult& r) {
  CHECK(r.counts.correct + r.counts.substitutions + r.counts.deletions == r.counts.ref_length);
  CHECK(static_cast<Cost>(r.counts.errors()) == r.distance);
  ErrorCounts sum;
  for (const auto& p : r.pairs) {
    CHECK(p.counts.correct + p.counts.substitutions + p.counts.deletions == p.counts.ref_length);
    sum += p.counts;
  }
  CHECK(sum == r.counts);
}

}  // namespace

TEST_CASE("cpWER of the two-stream example") {
  const auto r = cp_wer(testing::two_stream_reference(), testing::two_stream_hypothesis());
  CHECK(r.counts.insertions == 2);
  CHECK(r.counts.deletions == 3);
  CHECK(r.counts.substitutions == 2);
  CHECK(r.counts.ref_length == 8);
  CHECK(*r.counts.error_rate() == 0.875);
  check_consistent(r);
  CHECK(r.mapping.hypothesis_for("spk1") == std::optional<std::string>("stream2"));
  CHECK(r.mapping.hypothesis_for("spk2") == std::optional<std::string>("stream1"));
  CHECK_FALSE(r.mapping.hypothesis_for("spk3").has_value());
  CHECK(r.alignment.ref_words.size() == 8);
  CHECK(r.alignment.hyp_words.size() == 7);
}

TEST_CASE("cpWER is invariant to renaming hypothesis labels") {
  SegLst hyp = testing::two_stream_reference();
  for (auto& s : hyp.segments) s.speaker = "renamed_" + s.speaker;
  const auto r = cp_wer(testing::two_stream_reference(), hyp);
  CHECK(r.distance == 0);
}

TEST_CASE("unmatched hypothesis streams become insertions") {
  const SegLst ref{{seg("A", "a b", 0, 2)}};
  const SegLst hyp{{seg("h1", "a b", 0, 2), seg("h2", "x", 1, 2)}};
  const auto r = cp_wer(ref, hyp);
  CHECK(r.counts.insertions == 1);
  CHECK(r.counts.deletions == 0);
  CHECK(r.counts.substitutions == 0);
  CHECK(r.mapping.pairs.size() == 2);
  CHECK(r.mapping.reference_for("h2") == std::nullopt);
}

TEST_CASE("equal-cost mappings resolve to the lexicographically smallest pairing") {
  const SegLst ref{{seg("A", "x", 0, 1), seg("B", "y", 2, 3)}};
  const SegLst hyp{{seg("h1", "z", 0, 1), seg("h2", "w", 2, 3)}};
  const auto r = cp_wer(ref, hyp);
  CHECK(r.mapping.hypothesis_for("A") == std::optional<std::string>("h1"));
  CHECK(r.mapping.hypothesis_for("B") == std::optional<std::string>("h2"));
}

TEST_CASE("cpWER and tcpWER equal a permutation oracle") {
  testing::Rng rng(31);
  for (int n = 0; n < 300; ++n) {
    const auto inst = n % 2 ? testing::random_instance(rng) : testing::random_related_instance(rng);
    const Collar collar = testing::random_collar(rng);
    const auto r = cp_wer(inst.ref, inst.hyp, collar);
    CHECK(r.distance == testing::oracle_cp_distance(inst.ref, inst.hyp, collar));
    check_consistent(r);
  }
}

TEST_CASE("cpWER ignores splits of a segment") {
  testing::Rng rng(37);
  for (int n = 0; n < 200; ++n) {
    const auto inst = testing::random_related_instance(rng);
    const SegLst ref = validate(inst.ref);
    if (ref.empty()) continue;
    // Split one segment into two consecutive segments at a word boundary.
    const std::size_t pick = testing::uniform(rng, 0, ref.size() - 1);
    const auto words = tokenize(ref.segments[pick]);
    if (words.size() < 2) continue;
    SegLst split;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (i != pick) {
        split.segments.push_back(ref.segments[i]);
        continue;
      }
      Segment a = ref.segments[i];
      Segment b = ref.segments[i];
      a.words = words[0];
      b.words.clear();
      for (std::size_t w = 1; w < words.size(); ++w) b.words += (w > 1 ? " " : "") + words[w];
      split.segments.push_back(a);
      split.segments.push_back(b);
    }
    CHECK(cp_wer(split, inst.hyp).distance == cp_wer(ref, inst.hyp).distance);
  }
}

TEST_CASE("tcpWER bounds and monotonicity") {
  testing::Rng rng(41);
  for (int n = 0; n < 200; ++n) {
    const auto inst = testing::random_related_instance(rng);
    const Cost cp = cp_wer(inst.ref, inst.hyp).distance;
    Cost previous = kInfiniteCost;
    for (const double c : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      const Cost tcp = cp_wer(inst.ref, inst.hyp, Collar(c)).distance;
      CHECK(tcp >= cp);
      CHECK(tcp <= previous);
      previous = tcp;
    }
    CHECK(cp_wer(inst.ref, inst.hyp, Collar(1e6)).distance == cp);
  }
}

TEST_CASE("time-constrained scoring needs times") {
  const SegLst ref{{seg("A", "a")}};
  const SegLst hyp{{seg("h", "a")}};
  CHECK(cp_wer(ref, hyp).distance == 0);
  try {
    cp_wer(ref, hyp, Collar(5));
    FAIL("expected MissingTimes");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMissingTimes);
  }
}

TEST_CASE("DER examples") {
  const SegLst ref{{seg("A", "a", 0, 10)}};
  CHECK(*der(ref, {{seg("h", "x", 0, 10)}}).counts.der() == 0.0);

  const auto half = der(ref, {{seg("h", "x", 0, 5)}});
  CHECK(half.counts.missed == 5.0);
  CHECK(half.counts.false_alarm == 0.0);
  CHECK(*half.counts.der() == 0.5);

  const SegLst two{{seg("A", "a", 0, 10), seg("B", "b", 20, 30)}};
  const auto cross = der(two, {{seg("h1", "x", 20, 30), seg("h2", "y", 0, 10)}});
  CHECK(*cross.counts.der() == 0.0);
  CHECK(cross.mapping.hypothesis_for("A") == std::optional<std::string>("h2"));
  CHECK(cross.mapping.hypothesis_for("B") == std::optional<std::string>("h1"));

  // One stream covering two speakers: half its time is confusion.
  const SegLst turns{{seg("A", "a", 0, 10), seg("B", "b", 10, 20)}};
  const auto merged = der(turns, {{seg("h", "x", 0, 20)}});
  CHECK(merged.counts.missed == 0.0);
  CHECK(merged.counts.false_alarm == 0.0);
  CHECK(merged.counts.confusion == 10.0);
  CHECK(*merged.counts.der() == 0.5);
}

TEST_CASE("DER equals a grid oracle") {
  testing::Rng rng(43);
  for (int n = 0; n < 300; ++n) {
    const auto inst = testing::random_instance(rng);
    const auto r = der(inst.ref, inst.hyp);
    const auto o = testing::oracle_der(inst.ref, inst.hyp);
    CHECK(std::abs(r.counts.missed + r.counts.false_alarm + r.counts.confusion - o.best_cost) <
          1e-9);
    CHECK(std::abs(r.counts.missed - o.missed) < 1e-9);
    CHECK(std::abs(r.counts.false_alarm - o.false_alarm) < 1e-9);
    CHECK(std::abs(r.counts.total_reference_activity - o.reference_activity) < 1e-9);
  }
}

TEST_CASE("DA-WER") {
  const auto perfect = da_wer(testing::two_stream_reference(), testing::two_stream_reference());
  CHECK(perfect.distance == 0);

  // Disjoint speaker activity: the DER-optimal mapping is the WER-optimal one.
  const SegLst ref{{seg("A", "a b c", 0, 3), seg("B", "d e", 5, 7), seg("A", "f", 10, 11)}};
  const SegLst hyp{{seg("x", "a b", 0, 3), seg("y", "d e e", 5, 7), seg("x", "f", 10, 11)}};
  const auto da = da_wer(ref, hyp);
  const auto cp = cp_wer(ref, hyp);
  CHECK(da.distance == cp.distance);
  CHECK(da.mapping.pairs == cp.mapping.pairs);

  CHECK_THROWS_AS(da_wer({{seg("A", "a")}}, {{seg("h", "a")}}), Error);
}

TEST_CASE("DA-WER mapping depends on activity only") {
  testing::Rng rng(47);
  for (int n = 0; n < 200; ++n) {
    const auto inst = testing::random_instance(rng);
    SegLst other = inst.hyp;
    for (auto& s : other.segments) {
      std::string words;
      for (std::size_t k = testing::uniform(rng, 0, 3); k > 0; --k) words += "q ";
      s.words = words;
    }
    CHECK(da_wer(inst.ref, inst.hyp).mapping.pairs == da_wer(inst.ref, other).mapping.pairs);
  }
}

TEST_CASE("concatenated WER ignores labels") {
  const auto r = concatenated_wer(testing::two_stream_reference(), testing::two_stream_hypothesis());
  // Reference order A B C G E F D H against hypothesis A B C D E F H.
  CHECK(r.distance == 2);
  CHECK(r.counts.ref_length == 8);
}
