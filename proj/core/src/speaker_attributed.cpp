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

#include "meetwer/speaker_attributed.hpp"

#include <algorithm>
#include <map>

#include "meetwer/error.hpp"
#include "meetwer/linear_assignment.hpp"
#include "session_words.hpp"
#include "timeline.hpp"

namespace meetwer {
namespace {

using internal::SessionWords;

using internal::Interval;
using internal::merge_intervals;
using internal::overlap_duration;
using internal::total_duration;

std::map<std::string, std::vector<Interval>> activity(const SegLst& seglst) {
  std::map<std::string, std::vector<Interval>> raw;
  for (const auto& s : seglst.segments) {
    if (!s.has_times()) {
      throw Error(ErrorKind::kMissingTimes, "speaker activity needs start/end times (speaker '" +
                                                s.speaker + "', session '" + s.session_id + "')");
    }
    raw[s.speaker].emplace_back(*s.start_time, *s.end_time);
  }
  for (auto& [label, intervals] : raw) intervals = merge_intervals(std::move(intervals));
  return raw;
}

// Pads `cost` (real rows x real cols) to square with dummy rows/columns and
// returns the lexicographically smallest optimal mapping.
template <typename T>
SpeakerMapping solve_mapping(const std::vector<std::string>& ref_labels,
                             const std::vector<std::string>& hyp_labels,
                             const CostMatrix<T>& pair_cost, const std::vector<T>& ref_alone,
                             const std::vector<T>& hyp_alone) {
  const std::size_t k = ref_labels.size();
  const std::size_t c = hyp_labels.size();
  const std::size_t n = std::max(k, c);
  CostMatrix<T> cost(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < k && j < c) {
        cost[i][j] = pair_cost[i][j];
      } else if (i < k) {
        cost[i][j] = ref_alone[i];
      } else if (j < c) {
        cost[i][j] = hyp_alone[j];
      }
    }
  }
  const auto row_to_col = lexicographic_min_assignment(cost);
  SpeakerMapping mapping;
  std::vector<bool> hyp_taken(c, false);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = row_to_col[i];
    if (j < c) {
      mapping.pairs.emplace_back(ref_labels[i], hyp_labels[j]);
      hyp_taken[j] = true;
    } else {
      mapping.pairs.emplace_back(ref_labels[i], std::nullopt);
    }
  }
  for (std::size_t j = 0; j < c; ++j) {
    if (!hyp_taken[j]) mapping.pairs.emplace_back(std::nullopt, hyp_labels[j]);
  }
  return mapping;
}

struct Sides {
  SessionWords ref;
  SessionWords hyp;
};

Sides flatten_sides(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                    const WordTimestamps& timestamps) {
  Vocabulary vocab;
  Sides sides;
  sides.ref = internal::flatten(validate(ref), timestamps.reference, collar.bounded(), vocab);
  sides.hyp = internal::flatten(validate(hyp), timestamps.hypothesis, collar.bounded(), vocab);
  return sides;
}

// Scores every pair of `mapping` and fills the result.
SpeakerAttributedResult score_mapping(const Sides& sides, const SpeakerMapping& mapping,
                                      const Collar& collar) {
  SpeakerAttributedResult result;
  result.mapping = mapping;
  result.alignment.ref_words = sides.ref.info;
  result.alignment.hyp_words = sides.hyp.info;
  for (auto& w : result.alignment.hyp_words) w.assigned_speaker = mapping.reference_for(w.speaker);
  for (const auto& [r, h] : mapping.pairs) {
    const auto ref_words = r ? sides.ref.words_of_label(*r) : std::vector<std::size_t>{};
    const auto hyp_words = h ? sides.hyp.words_of_label(*h) : std::vector<std::size_t>{};
    auto pair = internal::score_pair(sides.ref, ref_words, sides.hyp, hyp_words, collar, r, h,
                                     result.alignment);
    result.distance += pair.distance;
    result.counts += pair.counts;
    result.pairs.push_back(std::move(pair));
  }
  return result;
}

}  // namespace

std::optional<std::string> SpeakerMapping::hypothesis_for(const std::string& reference) const {
  for (const auto& [r, h] : pairs) {
    if (r == reference) return h;
  }
  return std::nullopt;
}

std::optional<std::string> SpeakerMapping::reference_for(const std::string& hypothesis) const {
  for (const auto& [r, h] : pairs) {
    if (h == hypothesis) return r;
  }
  return std::nullopt;
}

std::optional<double> DerCounts::der() const {
  if (total_reference_activity <= 0.0) return std::nullopt;
  return (missed + false_alarm + confusion) / total_reference_activity;
}

SpeakerAttributedResult concatenated_wer(const SegLst& ref, const SegLst& hyp,
                                         const WordTimestamps& timestamps) {
  const Collar collar = Collar::unbounded();
  const auto sides = flatten_sides(ref, hyp, collar, timestamps);
  SpeakerAttributedResult result;
  result.alignment.ref_words = sides.ref.info;
  result.alignment.hyp_words = sides.hyp.info;
  std::vector<std::size_t> all_ref(sides.ref.info.size());
  std::vector<std::size_t> all_hyp(sides.hyp.info.size());
  for (std::size_t i = 0; i < all_ref.size(); ++i) all_ref[i] = i;
  for (std::size_t i = 0; i < all_hyp.size(); ++i) all_hyp[i] = i;
  auto pair = internal::score_pair(sides.ref, all_ref, sides.hyp, all_hyp, collar, std::nullopt,
                                   std::nullopt, result.alignment);
  result.distance = pair.distance;
  result.counts = pair.counts;
  result.pairs.push_back(std::move(pair));
  return result;
}

SpeakerAttributedResult cp_wer(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                               const WordTimestamps& timestamps) {
  const auto sides = flatten_sides(ref, hyp, collar, timestamps);
  const auto& ref_labels = sides.ref.labels;
  const auto& hyp_labels = sides.hyp.labels;

  std::vector<std::vector<Token>> ref_seq;
  std::vector<std::vector<Token>> hyp_seq;
  for (const auto& l : ref_labels) ref_seq.push_back(sides.ref.gather(sides.ref.words_of_label(l)));
  for (const auto& l : hyp_labels) hyp_seq.push_back(sides.hyp.gather(sides.hyp.words_of_label(l)));

  CostMatrix<Cost> pair_cost(ref_labels.size(), std::vector<Cost>(hyp_labels.size()));
  for (std::size_t i = 0; i < ref_labels.size(); ++i) {
    for (std::size_t j = 0; j < hyp_labels.size(); ++j) {
      pair_cost[i][j] = lev_distance(ref_seq[i], hyp_seq[j], CostScheme::unit(), collar);
    }
  }
  std::vector<Cost> ref_alone;
  std::vector<Cost> hyp_alone;
  for (const auto& s : ref_seq) ref_alone.push_back(static_cast<Cost>(s.size()));
  for (const auto& s : hyp_seq) hyp_alone.push_back(static_cast<Cost>(s.size()));

  const auto mapping = solve_mapping(ref_labels, hyp_labels, pair_cost, ref_alone, hyp_alone);
  return score_mapping(sides, mapping, collar);
}

DerResult der(const SegLst& ref, const SegLst& hyp) {
  const auto ref_activity = activity(validate(ref));
  const auto hyp_activity = activity(validate(hyp));
  std::vector<std::string> ref_labels;
  std::vector<std::string> hyp_labels;
  std::vector<double> ref_alone;
  std::vector<double> hyp_alone;
  for (const auto& [l, iv] : ref_activity) {
    ref_labels.push_back(l);
    ref_alone.push_back(total_duration(iv));
  }
  for (const auto& [l, iv] : hyp_activity) {
    hyp_labels.push_back(l);
    hyp_alone.push_back(total_duration(iv));
  }
  CostMatrix<double> pair_cost(ref_labels.size(), std::vector<double>(hyp_labels.size()));
  CostMatrix<double> overlap(ref_labels.size(), std::vector<double>(hyp_labels.size()));
  for (std::size_t i = 0; i < ref_labels.size(); ++i) {
    for (std::size_t j = 0; j < hyp_labels.size(); ++j) {
      overlap[i][j] =
          overlap_duration(ref_activity.at(ref_labels[i]), hyp_activity.at(hyp_labels[j]));
      pair_cost[i][j] = ref_alone[i] + hyp_alone[j] - 2.0 * overlap[i][j];
    }
  }

  DerResult result;
  result.mapping = solve_mapping(ref_labels, hyp_labels, pair_cost, ref_alone, hyp_alone);
  for (std::size_t i = 0; i < ref_labels.size(); ++i) {
    result.counts.total_reference_activity += ref_alone[i];
  }
  // Elementary intervals between all boundaries: with Nr reference and Nh
  // hypothesis labels active and Nc mapped pairs both active, missed time is
  // max(0, Nr - Nh), false alarm max(0, Nh - Nr) and confusion min(Nr, Nh) - Nc.
  std::vector<double> cuts;
  for (const auto& [l, iv] : ref_activity) {
    for (const auto& [b, e] : iv) cuts.insert(cuts.end(), {b, e});
  }
  for (const auto& [l, iv] : hyp_activity) {
    for (const auto& [b, e] : iv) cuts.insert(cuts.end(), {b, e});
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto active = [](const std::vector<Interval>& iv, double t) {
    const auto it = std::upper_bound(iv.begin(), iv.end(), t,
                                     [](double x, const Interval& i) { return x < i.second; });
    return it != iv.end() && it->first <= t;
  };
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
    const double len = cuts[k + 1] - cuts[k];
    std::size_t nr = 0, nh = 0, nc = 0;
    for (const auto& [l, iv] : ref_activity) nr += active(iv, mid);
    for (const auto& [l, iv] : hyp_activity) nh += active(iv, mid);
    for (const auto& [r, h] : result.mapping.pairs) {
      if (r && h && active(ref_activity.at(*r), mid) && active(hyp_activity.at(*h), mid)) ++nc;
    }
    if (nr > nh) result.counts.missed += len * static_cast<double>(nr - nh);
    if (nh > nr) result.counts.false_alarm += len * static_cast<double>(nh - nr);
    result.counts.confusion += len * static_cast<double>(std::min(nr, nh) - nc);
  }
  return result;
}

SpeakerAttributedResult da_wer(const SegLst& ref, const SegLst& hyp,
                               const WordTimestamps& timestamps) {
  const auto mapping = der(ref, hyp).mapping;
  const Collar collar = Collar::unbounded();
  const auto sides = flatten_sides(ref, hyp, collar, timestamps);
  return score_mapping(sides, mapping, collar);
}

}  // namespace meetwer
