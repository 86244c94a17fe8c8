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

#include "meetwer/greedy.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "assignment_session.hpp"
#include "meetwer/error.hpp"
#include "meetwer/speaker_attributed.hpp"
#include "timeline.hpp"

namespace meetwer {
namespace {

Cost min_plus(Cost a, Cost b) { return saturating_add(a, b); }

std::vector<Token> stream_rows(const AssignmentProblem& p, const std::vector<std::size_t>& labels,
                               std::size_t target, std::size_t skip = kNoTarget,
                               std::size_t add = kNoTarget) {
  std::vector<Token> rows;
  for (std::size_t u = 0; u < p.units.size(); ++u) {
    if (u == skip) continue;
    if (labels[u] == target || u == add) {
      rows.insert(rows.end(), p.units[u].begin(), p.units[u].end());
    }
  }
  return rows;
}

}  // namespace

void GreedyConfig::check(const CostScheme& base) const {
  if (phase_costs.empty()) throw Error(ErrorKind::kInvalidArgument, "no greedy phases");
  if (max_sweeps == 0) throw Error(ErrorKind::kInvalidArgument, "max_sweeps must be positive");
  for (const Cost s : phase_costs) {
    if (s <= base.correct || s > base.insertion + base.deletion) {
      throw Error(ErrorKind::kInvalidArgument,
                  "phase substitution cost " + std::to_string(s) +
                      " must exceed the correct cost and not exceed insertion + deletion");
    }
  }
}

StreamMatrices::StreamMatrices(const AssignmentProblem& problem, const CostScheme& costs,
                               std::vector<std::size_t> labels)
    : problem_(problem), costs_(costs), labels_(std::move(labels)) {
  if (labels_.size() != problem_.units.size()) {
    throw Error(ErrorKind::kInconsistentState, "one label per unit required");
  }
  for (const auto l : labels_) {
    if (l >= problem_.targets.size()) throw Error(ErrorKind::kInconsistentState, "label out of range");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  unit_begin_.assign(problem_.units.size(), inf);
  unit_end_.assign(problem_.units.size(), -inf);
  for (std::size_t u = 0; u < problem_.units.size(); ++u) {
    for (const auto& t : problem_.units[u]) {
      unit_begin_[u] = std::min(unit_begin_[u], t.begin);
      unit_end_[u] = std::max(unit_end_[u], t.end);
    }
  }
  target_begin_.assign(problem_.targets.size(), inf);
  target_end_.assign(problem_.targets.size(), -inf);
  for (std::size_t c = 0; c < problem_.targets.size(); ++c) {
    for (const auto& t : problem_.targets[c]) {
      target_begin_[c] = std::min(target_begin_[c], t.begin);
      target_end_[c] = std::max(target_end_[c], t.end);
    }
  }
  reset();
}

void StreamMatrices::reset() {
  const std::size_t C = problem_.targets.size();
  position_ = 0;
  forward_.assign(C, {});
  reverse_.assign(C, {});
  distance_.assign(C, 0);
  ahead_.assign(C, 0);
  for (std::size_t c = 0; c < C; ++c) {
    const auto& target = problem_.targets[c];
    const std::size_t m = target.size();
    auto& fw = forward_[c];
    fw.resize(m + 1);
    for (std::size_t t = 0; t <= m; ++t) fw[t] = costs_.insertion * static_cast<Cost>(t);

    std::vector<Cost> rv(m + 1);
    for (std::size_t t = 0; t <= m; ++t) rv[t] = costs_.insertion * static_cast<Cost>(m - t);
    reverse_[c].push_back(rv);
    std::vector<Cost> next(m + 1);
    for (std::size_t u = problem_.units.size(); u-- > 0;) {
      if (labels_[u] != c) continue;
      const auto& words = problem_.units[u];
      for (std::size_t i = words.size(); i-- > 0;) {
        const Token& w = words[i];
        next[m] = min_plus(rv[m], costs_.deletion);
        for (std::size_t t = m; t-- > 0;) {
          Cost best = min_plus(rv[t], costs_.deletion);
          best = std::min(best, min_plus(next[t + 1], costs_.insertion));
          const Token& h = target[t];
          if (problem_.collar.permits(w.begin, w.end, h.begin, h.end)) {
            best = std::min(best, min_plus(rv[t + 1], w.id == h.id ? costs_.correct
                                                                   : costs_.substitution));
          }
          next[t] = best;
        }
        std::swap(rv, next);
      }
      reverse_[c].push_back(rv);
      ++ahead_[c];
    }
    distance_[c] = reverse_[c].back()[0];
  }
}

Cost StreamMatrices::total() const {
  Cost t = 0;
  for (const auto d : distance_) t += d;
  return t;
}

std::vector<Cost> StreamMatrices::extend(const std::vector<Cost>& row, std::size_t unit,
                                         std::size_t target) const {
  const auto& tgt = problem_.targets[target];
  std::vector<Cost> prev = row;
  std::vector<Cost> cur(row.size());
  for (const Token& w : problem_.units[unit]) {
    cur[0] = min_plus(prev[0], costs_.deletion);
    for (std::size_t t = 1; t < prev.size(); ++t) {
      Cost best = min_plus(prev[t], costs_.deletion);
      best = std::min(best, min_plus(cur[t - 1], costs_.insertion));
      const Token& h = tgt[t - 1];
      if (problem_.collar.permits(w.begin, w.end, h.begin, h.end)) {
        best = std::min(best,
                        min_plus(prev[t - 1], w.id == h.id ? costs_.correct : costs_.substitution));
      }
      cur[t] = best;
    }
    std::swap(prev, cur);
  }
  return prev;
}

Cost StreamMatrices::combine(const std::vector<Cost>& forward,
                             const std::vector<Cost>& reverse) const {
  Cost best = kInfiniteCost;
  for (std::size_t t = 0; t < forward.size(); ++t) {
    best = std::min(best, min_plus(forward[t], reverse[t]));
  }
  return best;
}

bool StreamMatrices::unreachable(std::size_t unit, std::size_t target) const {
  if (problem_.units[unit].empty() || problem_.targets[target].empty()) return true;
  if (!problem_.collar.bounded()) return false;
  const double c = problem_.collar.seconds();
  return unit_begin_[unit] > target_end_[target] + c ||
         target_begin_[target] > unit_end_[unit] + c;
}

Cost StreamMatrices::move_delta(std::size_t target) const {
  if (done()) throw Error(ErrorKind::kInconsistentState, "sweep already finished");
  if (target >= problem_.targets.size()) {
    throw Error(ErrorKind::kInconsistentState, "target out of range");
  }
  const std::size_t u = position_;
  const std::size_t own = labels_[u];
  const Cost k = static_cast<Cost>(problem_.units[u].size());
  if (unreachable(u, target)) return k * costs_.deletion;
  if (target == own) {
    return distance_[own] - combine(forward_[own], reverse_[own][ahead_[own] - 1]);
  }
  return combine(extend(forward_[target], u, target), reverse_[target][ahead_[target]]) -
         distance_[target];
}

void StreamMatrices::advance(std::size_t target) {
  if (done()) throw Error(ErrorKind::kInconsistentState, "sweep already finished");
  const std::size_t u = position_;
  const std::size_t own = labels_[u];
  if (target != own) {
    distance_[own] = combine(forward_[own], reverse_[own][ahead_[own] - 1]);
    forward_[target] = extend(forward_[target], u, target);
    distance_[target] = combine(forward_[target], reverse_[target][ahead_[target]]);
    labels_[u] = target;
  } else {
    forward_[own] = extend(forward_[own], u, own);
  }
  // The suffix starting at this unit is never looked at again.
  reverse_[own].pop_back();
  --ahead_[own];
  ++position_;
}

Cost incremental_move_delta(const StreamMatrices& state, std::size_t unit, std::size_t from,
                            std::size_t to) {
  if (unit != state.position() || state.done() || state.labels()[unit] != from) {
    throw Error(ErrorKind::kInconsistentState,
                "move of unit " + std::to_string(unit) + " does not match the sweep state");
  }
  return state.move_delta(to);
}

Cost naive_move_delta(const AssignmentProblem& problem, const CostScheme& costs,
                      const std::vector<std::size_t>& labels, std::size_t unit, std::size_t to) {
  const std::size_t own = labels.at(unit);
  const auto& target = problem.targets.at(to);
  if (to == own) {
    return lev_distance(stream_rows(problem, labels, own), target, costs, problem.collar) -
           lev_distance(stream_rows(problem, labels, own, unit), target, costs, problem.collar);
  }
  return lev_distance(stream_rows(problem, labels, to, kNoTarget, unit), target, costs,
                      problem.collar) -
         lev_distance(stream_rows(problem, labels, to), target, costs, problem.collar);
}

GreedySolution greedy_solve(const AssignmentProblem& problem, std::vector<std::size_t> initial,
                            const GreedyConfig& config, GreedyImpl impl) {
  config.check(problem.costs);
  const std::size_t U = problem.units.size();
  const std::size_t C = problem.targets.size();
  GreedySolution out;
  out.solution.order.resize(U);
  std::iota(out.solution.order.begin(), out.solution.order.end(), std::size_t{0});
  if (C == 0) {
    out.solution.target_of_unit.assign(U, kNoTarget);
    out.solution.distance = score_assignment(problem, out.solution);
    return out;
  }
  if (initial.size() != U) throw Error(ErrorKind::kInvalidArgument, "one initial label per unit");

  std::vector<std::size_t> labels = std::move(initial);
  for (const Cost substitution : config.phase_costs) {
    CostScheme costs = problem.costs;
    costs.substitution = substitution;
    std::size_t sweeps = 0;
    while (true) {
      if (sweeps == config.max_sweeps) {
        throw Error(ErrorKind::kSweepLimitExceeded,
                    "greedy phase with substitution cost " + std::to_string(substitution) +
                        " did not settle within " + std::to_string(config.max_sweeps) + " sweeps");
      }
      ++sweeps;
      ++out.stats.sweeps;
      std::size_t moved = 0;
      if (impl == GreedyImpl::kIncremental) {
        StreamMatrices state(problem, costs, labels);
        while (!state.done()) {
          const std::size_t own = state.labels()[state.position()];
          std::size_t best = own;
          Cost best_delta = state.move_delta(own);
          for (std::size_t c = 0; c < C; ++c) {
            if (c == own) continue;
            const Cost d = state.move_delta(c);
            if (d < best_delta) {
              best = c;
              best_delta = d;
            }
          }
          if (best != own) ++moved;
          state.advance(best);
        }
        labels = state.labels();
      } else {
        for (std::size_t u = 0; u < U; ++u) {
          const std::size_t own = labels[u];
          std::size_t best = own;
          Cost best_delta = naive_move_delta(problem, costs, labels, u, own);
          for (std::size_t c = 0; c < C; ++c) {
            if (c == own) continue;
            const Cost d = naive_move_delta(problem, costs, labels, u, c);
            if (d < best_delta) {
              best = c;
              best_delta = d;
            }
          }
          if (best != own) ++moved;
          labels[u] = best;
        }
      }
      out.stats.moves += moved;
      if (moved == 0) break;
    }
  }
  out.solution.target_of_unit = std::move(labels);
  out.solution.distance = score_assignment(problem, out.solution);
  return out;
}

namespace {

std::map<std::string, std::vector<internal::Interval>> activity(const SegLst& validated) {
  std::map<std::string, std::vector<internal::Interval>> out;
  for (const auto& s : validated.segments) {
    auto& iv = out[s.speaker];
    if (s.has_times()) iv.emplace_back(*s.start_time, *s.end_time);
  }
  for (auto& [label, iv] : out) iv = internal::merge_intervals(std::move(iv));
  return out;
}

// Target index per unit segment: the mapped label, else the target label
// with the largest overlap in time.
std::vector<std::size_t> initial_labels(const SegLst& unit_side, const SegLst& target_side,
                                        const std::vector<std::string>& unit_segment_labels,
                                        const std::vector<std::string>& target_labels,
                                        const std::map<std::string, std::string>& mapped) {
  const auto unit_activity = activity(unit_side);
  const auto target_activity = activity(target_side);
  std::map<std::string, std::size_t> chosen;
  for (const auto& [label, iv] : unit_activity) {
    const auto m = mapped.find(label);
    if (m != mapped.end()) {
      chosen[label] = static_cast<std::size_t>(
          std::lower_bound(target_labels.begin(), target_labels.end(), m->second) -
          target_labels.begin());
      continue;
    }
    std::size_t best = 0;
    double best_overlap = -1.0;
    for (std::size_t c = 0; c < target_labels.size(); ++c) {
      const auto it = target_activity.find(target_labels[c]);
      const double o = it == target_activity.end() ? 0.0 : internal::overlap_duration(iv, it->second);
      if (o > best_overlap) {
        best = c;
        best_overlap = o;
      }
    }
    chosen[label] = best;
  }
  std::vector<std::size_t> labels;
  for (const auto& l : unit_segment_labels) labels.push_back(chosen.at(l));
  return labels;
}

GreedyResult run(const SegLst& ref, const SegLst& hyp, AssignmentMode mode, const Collar& collar,
                 const WordTimestamps& timestamps, const GreedyConfig& config, GreedyImpl impl) {
  const auto sides = internal::flatten_sides(ref, hyp, collar, timestamps);
  const auto problem = internal::make_problem(sides, mode, collar);
  const bool swap = mode == AssignmentMode::kDiCp;

  std::vector<std::size_t> initial;
  if (!problem.targets.empty()) {
    const auto mapping = cp_wer(ref, hyp, collar, timestamps).mapping;
    std::map<std::string, std::string> mapped;
    for (const auto& [r, h] : mapping.pairs) {
      if (r && h) mapped[swap ? *h : *r] = swap ? *r : *h;
    }
    const SegLst vref = validate(ref);
    const SegLst vhyp = validate(hyp);
    initial = swap ? initial_labels(vhyp, vref, sides.hyp.segment_speaker, sides.ref.labels, mapped)
                   : initial_labels(vref, vhyp, sides.ref.segment_speaker, sides.hyp.labels, mapped);
  }
  const auto greedy = greedy_solve(problem, std::move(initial), config, impl);
  GreedyResult result;
  static_cast<StreamAssignmentResult&>(result) =
      internal::rescore(sides, mode, greedy.solution, collar);
  result.stats = greedy.stats;
  if (result.distance != greedy.solution.distance) {
    throw Error(ErrorKind::kInconsistentState, "greedy rescoring disagrees with the search");
  }
  return result;
}

}  // namespace

GreedyResult greedy_di_cp(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                          const WordTimestamps& timestamps, const GreedyConfig& config,
                          GreedyImpl impl) {
  return run(ref, hyp, AssignmentMode::kDiCp, collar, timestamps, config, impl);
}

GreedyResult greedy_orc(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                        const WordTimestamps& timestamps, const GreedyConfig& config,
                        GreedyImpl impl) {
  return run(ref, hyp, AssignmentMode::kOrc, collar, timestamps, config, impl);
}

}  // namespace meetwer
