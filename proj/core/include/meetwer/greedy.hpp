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

#include <cstddef>
#include <optional>
#include <vector>

#include "meetwer/levenshtein.hpp"
#include "meetwer/seglst.hpp"
#include "meetwer/stream_assignment.hpp"

namespace meetwer {

struct GreedyConfig {
  // Substitution cost of each phase, in order. Values above insertion +
  // deletion make substitutions pointless and are rejected.
  std::vector<Cost> phase_costs = {2, 1};
  std::size_t max_sweeps = 100;

  void check(const CostScheme& base) const;
};

enum class GreedyImpl { kIncremental, kNaive };

struct GreedyStats {
  std::size_t sweeps = 0;
  std::size_t moves = 0;
};

struct GreedySolution {
  AssignmentSolution solution;
  GreedyStats stats;
};

// Forward rows of the units visited so far in the current sweep and reverse
// rows of every suffix still ahead, per target. One sweep visits the units
// in index order; each visit either keeps or moves the unit.
class StreamMatrices {
 public:
  StreamMatrices(const AssignmentProblem& problem, const CostScheme& costs,
                 std::vector<std::size_t> labels);

  // Rebuilds all rows for a new sweep from the current labels.
  void reset();

  std::size_t position() const { return position_; }
  bool done() const { return position_ == problem_.units.size(); }
  const std::vector<std::size_t>& labels() const { return labels_; }
  Cost stream_distance(std::size_t target) const { return distance_[target]; }
  Cost total() const;

  // m - n of `target` for the unit at position(): the target's distance with
  // the unit minus its distance without it. The total after moving the unit
  // differs from the current total by move_delta(target) - move_delta(own).
  Cost move_delta(std::size_t target) const;

  // Commits the unit at position() to `target` and advances.
  void advance(std::size_t target);

 private:
  std::vector<Cost> extend(const std::vector<Cost>& row, std::size_t unit,
                           std::size_t target) const;
  Cost combine(const std::vector<Cost>& forward, const std::vector<Cost>& reverse) const;
  bool unreachable(std::size_t unit, std::size_t target) const;

  const AssignmentProblem& problem_;
  CostScheme costs_;
  std::vector<std::size_t> labels_;
  std::size_t position_ = 0;
  std::vector<Cost> distance_;
  std::vector<std::vector<Cost>> forward_;
  // reverse_[c][l]: row of the last l units currently on target c.
  std::vector<std::vector<std::vector<Cost>>> reverse_;
  std::vector<std::size_t> ahead_;
  std::vector<double> unit_begin_, unit_end_, target_begin_, target_end_;
};

// Checks that `unit` is the one under the sweep and `from` its target.
Cost incremental_move_delta(const StreamMatrices& state, std::size_t unit, std::size_t from,
                            std::size_t to);

// The same quantity by full recomputation of both affected streams.
Cost naive_move_delta(const AssignmentProblem& problem, const CostScheme& costs,
                      const std::vector<std::size_t>& labels, std::size_t unit, std::size_t to);

// Repeated sweeps per phase until one sweep moves nothing. The distance of
// the result is under problem.costs.
GreedySolution greedy_solve(const AssignmentProblem& problem, std::vector<std::size_t> initial,
                            const GreedyConfig& config = {},
                            GreedyImpl impl = GreedyImpl::kIncremental);

struct GreedyResult : StreamAssignmentResult {
  GreedyStats stats;
};

// Hypothesis segments start on the reference speaker their label is mapped
// to by cpWER; unmapped labels go to the speaker they overlap most.
GreedyResult greedy_di_cp(const SegLst& ref, const SegLst& hyp,
                          const Collar& collar = Collar::unbounded(),
                          const WordTimestamps& timestamps = {}, const GreedyConfig& config = {},
                          GreedyImpl impl = GreedyImpl::kIncremental);

// Reference segments start on the stream their speaker is mapped to.
GreedyResult greedy_orc(const SegLst& ref, const SegLst& hyp,
                        const Collar& collar = Collar::unbounded(),
                        const WordTimestamps& timestamps = {}, const GreedyConfig& config = {},
                        GreedyImpl impl = GreedyImpl::kIncremental);

}  // namespace meetwer
