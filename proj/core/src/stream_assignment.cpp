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

#include "meetwer/stream_assignment.hpp"

#include <algorithm>
#include <map>

#include "meetwer/error.hpp"
#include "assignment_session.hpp"

namespace meetwer {
namespace internal {

Sides flatten_sides(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                    const WordTimestamps& timestamps) {
  Vocabulary vocab;
  Sides sides;
  sides.ref = internal::flatten(validate(ref), timestamps.reference, collar.bounded(), vocab);
  sides.hyp = internal::flatten(validate(hyp), timestamps.hypothesis, collar.bounded(), vocab);
  return sides;
}

AssignmentProblem make_problem(const Sides& sides, AssignmentMode mode, const Collar& collar) {
  const bool swap = mode == AssignmentMode::kDiCp;
  const SessionWords& units = swap ? sides.hyp : sides.ref;
  const SessionWords& targets = swap ? sides.ref : sides.hyp;
  AssignmentProblem p;
  p.collar = collar;
  p.costs = swap ? CostScheme::unit().swapped() : CostScheme::unit();
  for (std::size_t s = 0; s < units.segment_words.size(); ++s) {
    p.units.push_back(units.gather(units.segment_words[s]));
    std::size_t group = 0;
    if (mode == AssignmentMode::kMimo) {
      const auto& l = units.labels;
      group = static_cast<std::size_t>(
          std::lower_bound(l.begin(), l.end(), units.segment_speaker[s]) - l.begin());
    }
    p.unit_group.push_back(group);
  }
  for (const auto& label : targets.labels) {
    p.targets.push_back(targets.gather(targets.words_of_label(label)));
  }
  return p;
}

StreamAssignmentResult rescore(const Sides& sides, AssignmentMode mode,
                               const AssignmentSolution& solution, const Collar& collar) {
  const bool swap = mode == AssignmentMode::kDiCp;
  const SessionWords& units = swap ? sides.hyp : sides.ref;
  const SessionWords& targets = swap ? sides.ref : sides.hyp;

  StreamAssignmentResult result;
  result.alignment.ref_words = sides.ref.info;
  result.alignment.hyp_words = sides.hyp.info;
  result.assignment.order = solution.order;
  result.assignment.labels.resize(units.segment_words.size());
  for (std::size_t s = 0; s < units.segment_words.size(); ++s) {
    const std::size_t c = solution.target_of_unit.at(s);
    if (c != kNoTarget) result.assignment.labels[s] = targets.labels.at(c);
  }
  if (swap) {
    for (auto& w : result.alignment.hyp_words) w.assigned_speaker = result.assignment.labels[w.segment];
  }

  auto add = [&](const std::vector<std::size_t>& unit_words,
                 const std::vector<std::size_t>& target_words, std::optional<std::string> label) {
    PairScore pair =
        swap ? internal::score_pair(sides.ref, target_words, sides.hyp, unit_words, collar,
                                    std::move(label), std::nullopt, result.alignment)
             : internal::score_pair(sides.ref, unit_words, sides.hyp, target_words, collar,
                                    std::nullopt, std::move(label), result.alignment);
    result.distance += pair.distance;
    result.counts += pair.counts;
    result.pairs.push_back(std::move(pair));
  };

  if (targets.labels.empty()) {
    add(units.words_of_segments(solution.order), {}, std::nullopt);
    return result;
  }
  for (std::size_t c = 0; c < targets.labels.size(); ++c) {
    std::vector<std::size_t> segments;
    for (const auto s : solution.order) {
      if (solution.target_of_unit.at(s) == c) segments.push_back(s);
    }
    add(units.words_of_segments(segments), targets.words_of_label(targets.labels[c]),
        targets.labels[c]);
  }
  return result;
}

}  // namespace internal

using internal::flatten_sides;
using internal::make_problem;
using internal::rescore;

AssignmentProblem build_assignment_problem(const SegLst& ref, const SegLst& hyp,
                                           AssignmentMode mode, const Collar& collar,
                                           const WordTimestamps& timestamps) {
  return make_problem(flatten_sides(ref, hyp, collar, timestamps), mode, collar);
}

StreamAssignmentResult rescore_assignment(const SegLst& ref, const SegLst& hyp,
                                          AssignmentMode mode, const AssignmentSolution& solution,
                                          const Collar& collar, const WordTimestamps& timestamps) {
  return rescore(flatten_sides(ref, hyp, collar, timestamps), mode, solution, collar);
}

StreamAssignmentResult stream_assignment_wer(const SegLst& ref, const SegLst& hyp,
                                             AssignmentMode mode, const Collar& collar,
                                             const WordTimestamps& timestamps,
                                             const SearchLimits& limits) {
  const auto sides = flatten_sides(ref, hyp, collar, timestamps);
  const auto problem = make_problem(sides, mode, collar);
  const auto solution = solve_exact(problem, limits);
  auto result = rescore(sides, mode, solution, collar);
  if (result.distance != solution.distance) {
    throw Error(ErrorKind::kInconsistentState,
                "rescored assignment distance " + std::to_string(result.distance) +
                    " differs from search distance " + std::to_string(solution.distance));
  }
  return result;
}

StreamAssignmentResult orc_wer(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                               const WordTimestamps& timestamps, const SearchLimits& limits) {
  return stream_assignment_wer(ref, hyp, AssignmentMode::kOrc, collar, timestamps, limits);
}

StreamAssignmentResult mimo_wer(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                                const WordTimestamps& timestamps, const SearchLimits& limits) {
  return stream_assignment_wer(ref, hyp, AssignmentMode::kMimo, collar, timestamps, limits);
}

StreamAssignmentResult di_cp_wer(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                                 const WordTimestamps& timestamps, const SearchLimits& limits) {
  return stream_assignment_wer(ref, hyp, AssignmentMode::kDiCp, collar, timestamps, limits);
}

AssignmentSolution brute_force_oracle(const SegLst& ref, const SegLst& hyp, AssignmentMode mode,
                                      const Collar& collar, const WordTimestamps& timestamps) {
  return solve_brute_force(build_assignment_problem(ref, hyp, mode, collar, timestamps));
}

}  // namespace meetwer
