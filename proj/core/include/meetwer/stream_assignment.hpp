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
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "meetwer/alignment.hpp"
#include "meetwer/levenshtein.hpp"
#include "meetwer/seglst.hpp"

namespace meetwer {

enum class AssignmentMode { kOrc, kMimo, kDiCp };

std::string_view to_string(AssignmentMode mode);

// Segments of one side (units) are distributed over the label streams of the
// other side (targets). Units of one group keep their relative order inside
// every target; with a single group the global order is kept.
//
// Units are the rows of every per-target Levenshtein matrix, so an unmatched
// unit word costs `costs.deletion`.
struct AssignmentProblem {
  std::vector<std::vector<Token>> units;
  std::vector<std::size_t> unit_group;
  std::vector<std::vector<Token>> targets;
  CostScheme costs = CostScheme::unit();
  Collar collar = Collar::unbounded();
};

inline constexpr std::size_t kNoTarget = std::numeric_limits<std::size_t>::max();

struct AssignmentSolution {
  Cost distance = 0;
  std::vector<std::size_t> target_of_unit;  // kNoTarget when there are no targets
  std::vector<std::size_t> order;           // emission order of all units
};

struct SearchLimits {
  // Dynamic-programming cells that may be evaluated.
  double cell_budget = 1e9;
  // Cells that may be held for the backtrace.
  double storage_budget = 2e8;
};

struct CellEstimate {
  double states = 0;
  double evaluated_cells = 0;
  double stored_cells = 0;
};

CellEstimate estimate_cells(const AssignmentProblem& problem);

// Throws ComplexityGuard before allocating when the estimate exceeds `limits`.
AssignmentSolution solve_exact(const AssignmentProblem& problem, const SearchLimits& limits = {});

// Summed per-target distance of `solution`, recomputed from scratch.
Cost score_assignment(const AssignmentProblem& problem, const AssignmentSolution& solution);

// Per-target ordered unit lists of every admissible assignment: units of a
// group stay in order and the union of group and target orders is acyclic.
// At most 6 units and 3 targets, TooLarge otherwise.
std::vector<std::vector<std::vector<std::size_t>>> enumerate_assignments(
    const AssignmentProblem& problem);

// Exhaustive minimum over enumerate_assignments, scored with the unpruned
// full-matrix recursion.
AssignmentSolution solve_brute_force(const AssignmentProblem& problem);

// Reassigned side: reference segments for ORC/MIMO, hypothesis segments for
// DI-cp. Targets are the sorted labels of the other side.
AssignmentProblem build_assignment_problem(const SegLst& ref, const SegLst& hyp,
                                           AssignmentMode mode,
                                           const Collar& collar = Collar::unbounded(),
                                           const WordTimestamps& timestamps = {});

struct StreamAssignment {
  // One label per segment of the reassigned side, in canonical segment order.
  std::vector<std::optional<std::string>> labels;
  std::vector<std::size_t> order;
};

struct StreamAssignmentResult {
  Cost distance = 0;
  ErrorCounts counts;
  StreamAssignment assignment;
  std::vector<PairScore> pairs;
  Alignment alignment;
};

StreamAssignmentResult orc_wer(const SegLst& ref, const SegLst& hyp,
                               const Collar& collar = Collar::unbounded(),
                               const WordTimestamps& timestamps = {},
                               const SearchLimits& limits = {});

StreamAssignmentResult mimo_wer(const SegLst& ref, const SegLst& hyp,
                                const Collar& collar = Collar::unbounded(),
                                const WordTimestamps& timestamps = {},
                                const SearchLimits& limits = {});

// Hypothesis segments are redistributed over reference speakers; counts keep
// the true reference orientation.
StreamAssignmentResult di_cp_wer(const SegLst& ref, const SegLst& hyp,
                                 const Collar& collar = Collar::unbounded(),
                                 const WordTimestamps& timestamps = {},
                                 const SearchLimits& limits = {});

StreamAssignmentResult stream_assignment_wer(const SegLst& ref, const SegLst& hyp,
                                             AssignmentMode mode,
                                             const Collar& collar = Collar::unbounded(),
                                             const WordTimestamps& timestamps = {},
                                             const SearchLimits& limits = {});

// Scores the fixed `solution` of build_assignment_problem(ref, hyp, mode, ...)
// in the true orientation.
StreamAssignmentResult rescore_assignment(const SegLst& ref, const SegLst& hyp,
                                          AssignmentMode mode, const AssignmentSolution& solution,
                                          const Collar& collar = Collar::unbounded(),
                                          const WordTimestamps& timestamps = {});

AssignmentSolution brute_force_oracle(const SegLst& ref, const SegLst& hyp, AssignmentMode mode,
                                      const Collar& collar = Collar::unbounded(),
                                      const WordTimestamps& timestamps = {});

}  // namespace meetwer
