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
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "meetwer/error.hpp"
#include "meetwer/stream_assignment.hpp"

namespace meetwer {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

Cost clamp_cost(Cost v) { return v >= kInfiniteCost ? kInfiniteCost : v; }

std::size_t group_count(const AssignmentProblem& p) {
  std::size_t g = 0;
  for (const auto x : p.unit_group) g = std::max(g, x + 1);
  return g;
}

void check_problem(const AssignmentProblem& p) {
  if (p.unit_group.size() != p.units.size()) {
    throw Error(ErrorKind::kInvalidArgument, "unit_group must have one entry per unit");
  }
}

Cost total_unit_words(const AssignmentProblem& p) {
  Cost n = 0;
  for (const auto& u : p.units) n += static_cast<Cost>(u.size());
  return n;
}

// Axis-aligned region of target positions that can lie on an optimal path
// for one search state. Positions beyond `upper` continue by insertions only.
struct Box {
  std::vector<std::size_t> lo;
  std::vector<std::size_t> upper;
  std::vector<std::size_t> stride;
  std::size_t size = 1;
  double size_estimate = 1.0;

  std::size_t extent(std::size_t c) const { return upper[c] - lo[c] + 1; }
};

class Lattice {
 public:
  explicit Lattice(const AssignmentProblem& p) : p_(p) {
    groups_ = group_count(p);
    group_units_.resize(groups_);
    for (std::size_t u = 0; u < p.units.size(); ++u) group_units_[p.unit_group[u]].push_back(u);

    radix_.resize(groups_);
    states_ = 1.0;
    for (std::size_t g = 0; g < groups_; ++g) {
      radix_[g] = static_cast<std::size_t>(states_);
      states_ *= static_cast<double>(group_units_[g].size() + 1);
      if (states_ > 1e15) break;
    }

    const bool bounded = p.collar.bounded();
    const double collar = p.collar.seconds();
    prefix_end_.resize(groups_);
    suffix_begin_.resize(groups_);
    for (std::size_t g = 0; g < groups_; ++g) {
      const auto& us = group_units_[g];
      auto& pe = prefix_end_[g];
      auto& sb = suffix_begin_[g];
      pe.assign(us.size() + 1, kNegInf);
      sb.assign(us.size() + 1, kPosInf);
      for (std::size_t i = 0; i < us.size(); ++i) {
        double e = kNegInf;
        for (const auto& t : p.units[us[i]]) e = std::max(e, bounded ? t.end : 0.0);
        pe[i + 1] = std::max(pe[i], e);
      }
      for (std::size_t i = us.size(); i-- > 0;) {
        double b = kPosInf;
        for (const auto& t : p.units[us[i]]) b = std::min(b, bounded ? t.begin : 0.0);
        sb[i] = std::min(sb[i + 1], b);
      }
    }

    // Target envelopes with the collar folded in.
    target_prefix_end_.resize(p.targets.size());
    target_suffix_begin_.resize(p.targets.size());
    for (std::size_t c = 0; c < p.targets.size(); ++c) {
      const auto& t = p.targets[c];
      auto& pe = target_prefix_end_[c];
      auto& sb = target_suffix_begin_[c];
      pe.resize(t.size());
      sb.resize(t.size());
      double run = kNegInf;
      for (std::size_t j = 0; j < t.size(); ++j) {
        run = std::max(run, t[j].end);
        pe[j] = run + collar;
      }
      run = kPosInf;
      for (std::size_t j = t.size(); j-- > 0;) {
        run = std::min(run, t[j].begin);
        sb[j] = run - collar;
      }
    }
  }

  std::size_t groups() const { return groups_; }
  double state_count() const { return states_; }
  const std::vector<std::size_t>& group_units(std::size_t g) const { return group_units_[g]; }
  std::size_t radix(std::size_t g) const { return radix_[g]; }

  std::vector<std::size_t> counts_of(std::size_t index) const {
    std::vector<std::size_t> s(groups_);
    for (std::size_t g = groups_; g-- > 0;) {
      s[g] = index / radix_[g];
      index %= radix_[g];
    }
    return s;
  }

  Box box(const std::vector<std::size_t>& s) const {
    double max_end = kNegInf;
    double min_begin = kPosInf;
    for (std::size_t g = 0; g < groups_; ++g) {
      max_end = std::max(max_end, prefix_end_[g][s[g]]);
      min_begin = std::min(min_begin, suffix_begin_[g][s[g]]);
    }
    const std::size_t C = p_.targets.size();
    Box b;
    b.lo.resize(C);
    b.upper.resize(C);
    b.stride.resize(C);
    for (std::size_t c = 0; c < C; ++c) {
      const std::size_t m = p_.targets[c].size();
      std::size_t hi;
      std::size_t lo;
      if (p_.collar.bounded()) {
        const auto& sb = target_suffix_begin_[c];
        const auto& pe = target_prefix_end_[c];
        // Words from `hi` on start too late for every processed unit word.
        hi = static_cast<std::size_t>(std::upper_bound(sb.begin(), sb.end(), max_end) - sb.begin());
        // Words before `lo` end too early for every unprocessed unit word.
        lo = static_cast<std::size_t>(
            std::partition_point(pe.begin(), pe.end(), [&](double v) { return v < min_begin; }) -
            pe.begin());
      } else {
        hi = max_end > kNegInf ? m : 0;
        lo = min_begin < kPosInf ? 0 : m;
      }
      b.lo[c] = lo;
      b.upper[c] = std::max(lo, hi);
    }
    for (std::size_t c = C; c-- > 0;) {
      b.stride[c] = b.size;
      b.size_estimate *= static_cast<double>(b.extent(c));
      b.size *= b.extent(c);
    }
    return b;
  }

 private:
  const AssignmentProblem& p_;
  std::size_t groups_ = 0;
  std::vector<std::vector<std::size_t>> group_units_;
  std::vector<std::size_t> radix_;
  double states_ = 1.0;
  std::vector<std::vector<double>> prefix_end_;
  std::vector<std::vector<double>> suffix_begin_;
  std::vector<std::vector<double>> target_prefix_end_;
  std::vector<std::vector<double>> target_suffix_begin_;
};

double fibers(const Box& out, std::size_t c) {
  double f = 1.0;
  for (std::size_t d = 0; d < out.lo.size(); ++d) {
    if (d != c) f *= static_cast<double>(out.extent(d));
  }
  return f;
}

CellEstimate estimate(const AssignmentProblem& p, const Lattice& lattice, double cap) {
  CellEstimate e;
  e.states = lattice.state_count();
  if (e.states > cap) {
    e.evaluated_cells = e.states;
    e.stored_cells = e.states;
    return e;
  }
  const auto n = static_cast<std::size_t>(e.states);
  const std::size_t C = p.targets.size();
  for (std::size_t index = 0; index < n; ++index) {
    auto s = lattice.counts_of(index);
    const Box in = lattice.box(s);
    e.stored_cells += in.size_estimate;
    for (std::size_t g = 0; g < lattice.groups(); ++g) {
      if (s[g] == lattice.group_units(g).size()) continue;
      const auto k = static_cast<double>(p.units[lattice.group_units(g)[s[g]]].size());
      ++s[g];
      const Box out = lattice.box(s);
      --s[g];
      for (std::size_t c = 0; c < C; ++c) {
        const double len = static_cast<double>(out.upper[c] - in.lo[c] + 1);
        e.evaluated_cells += fibers(out, c) * len * (k + 1.0);
      }
    }
    if (e.evaluated_cells > cap || e.stored_cells > cap) break;
  }
  return e;
}

struct StateTable {
  std::vector<Cost> value;
  std::vector<std::int32_t> choice;
  std::vector<std::int32_t> origin;
};

}  // namespace

std::string_view to_string(AssignmentMode mode) {
  switch (mode) {
    case AssignmentMode::kOrc: return "orc";
    case AssignmentMode::kMimo: return "mimo";
    case AssignmentMode::kDiCp: return "di_cp";
  }
  return "unknown";
}

CellEstimate estimate_cells(const AssignmentProblem& problem) {
  check_problem(problem);
  Lattice lattice(problem);
  return estimate(problem, lattice, kPosInf);
}

AssignmentSolution solve_exact(const AssignmentProblem& problem, const SearchLimits& limits) {
  check_problem(problem);
  const auto& p = problem;
  const std::size_t U = p.units.size();
  const std::size_t C = p.targets.size();
  AssignmentSolution sol;

  if (C == 0) {
    sol.distance = p.costs.deletion * total_unit_words(p);
    sol.target_of_unit.assign(U, kNoTarget);
    sol.order.resize(U);
    std::iota(sol.order.begin(), sol.order.end(), std::size_t{0});
    return sol;
  }

  Lattice lattice(p);
  const double cap = std::max(limits.cell_budget, limits.storage_budget);
  const CellEstimate est = estimate(p, lattice, cap);
  if (est.evaluated_cells > limits.cell_budget || est.stored_cells > limits.storage_budget) {
    std::ostringstream msg;
    msg << "exact assignment search needs about " << est.evaluated_cells << " cells ("
        << est.stored_cells << " stored) over " << est.states
        << " states, above the budget; use a time-constrained variant with a finite collar or a "
           "greedy approximation";
    throw Error(ErrorKind::kComplexityGuard, msg.str());
  }

  const Cost I = p.costs.insertion;
  const Cost D = p.costs.deletion;
  const auto n_states = static_cast<std::size_t>(lattice.state_count());
  std::vector<StateTable> tables(n_states);

  {
    const auto s0 = lattice.counts_of(0);
    const Box b = lattice.box(s0);
    auto& t = tables[0];
    t.value.resize(b.size);
    t.choice.assign(b.size, -1);
    t.origin.assign(b.size, -1);
    for (std::size_t idx = 0; idx < b.size; ++idx) {
      Cost v = 0;
      std::size_t rest = idx;
      for (std::size_t c = 0; c < C; ++c) {
        v += I * static_cast<Cost>(b.lo[c] + rest / b.stride[c]);
        rest %= b.stride[c];
      }
      t.value[idx] = v;
    }
  }

  std::vector<Cost> row_prev;
  std::vector<Cost> row_cur;
  std::vector<std::int32_t> org_prev;
  std::vector<std::int32_t> org_cur;
  std::vector<std::size_t> q(C);

  for (std::size_t index = 0; index < n_states; ++index) {
    auto s = lattice.counts_of(index);
    const Box in = lattice.box(s);
    auto& tin = tables[index];
    for (std::size_t g = 0; g < lattice.groups(); ++g) {
      if (s[g] == lattice.group_units(g).size()) continue;
      const std::size_t u = lattice.group_units(g)[s[g]];
      const auto& words = p.units[u];
      const std::size_t k = words.size();
      ++s[g];
      const Box out = lattice.box(s);
      --s[g];
      const std::size_t next = index + lattice.radix(g);
      auto& tout = tables[next];
      if (tout.value.empty()) {
        tout.value.assign(out.size, kInfiniteCost);
        tout.choice.assign(out.size, -1);
        tout.origin.assign(out.size, -1);
      }

      for (std::size_t c = 0; c < C; ++c) {
        const auto& target = p.targets[c];
        const std::size_t t0 = in.lo[c];
        const std::size_t t1 = out.upper[c];
        const std::size_t len = t1 - t0 + 1;
        row_prev.resize(len);
        row_cur.resize(len);
        org_prev.resize(len);
        org_cur.resize(len);
        const auto code = static_cast<std::int32_t>(g * C + c);

        // Odometer over the output box in every dimension except c.
        for (std::size_t d = 0; d < C; ++d) q[d] = out.lo[d];
        bool more = true;
        while (more) {
          Cost extra = 0;
          std::size_t in_base = 0;
          std::size_t out_base = 0;
          for (std::size_t d = 0; d < C; ++d) {
            if (d == c) continue;
            const std::size_t qi = std::min(q[d], in.upper[d]);
            extra += I * static_cast<Cost>(q[d] - qi);
            in_base += (qi - in.lo[d]) * in.stride[d];
            out_base += (q[d] - out.lo[d]) * out.stride[d];
          }

          for (std::size_t t = t0; t <= t1; ++t) {
            const std::size_t tc = std::min(t, in.upper[c]);
            Cost f = clamp_cost(tin.value[in_base + (tc - in.lo[c]) * in.stride[c]] + extra +
                                I * static_cast<Cost>(t - tc));
            const std::size_t x = t - t0;
            if (x > 0 && row_prev[x - 1] + I < f) {
              row_prev[x] = row_prev[x - 1] + I;
              org_prev[x] = org_prev[x - 1];
            } else {
              row_prev[x] = f;
              org_prev[x] = static_cast<std::int32_t>(t);
            }
          }

          for (std::size_t i = 0; i < k; ++i) {
            const Token& w = words[i];
            row_cur[0] = clamp_cost(row_prev[0] + D);
            org_cur[0] = org_prev[0];
            for (std::size_t x = 1; x < len; ++x) {
              const Token& h = target[t0 + x - 1];
              Cost best = kInfiniteCost;
              std::int32_t from = -1;
              if (p.collar.permits(w.begin, w.end, h.begin, h.end)) {
                best = clamp_cost(row_prev[x - 1] +
                                  (w.id == h.id ? p.costs.correct : p.costs.substitution));
                from = org_prev[x - 1];
              }
              const Cost del = clamp_cost(row_prev[x] + D);
              if (del < best) {
                best = del;
                from = org_prev[x];
              }
              const Cost ins = clamp_cost(row_cur[x - 1] + I);
              if (ins < best) {
                best = ins;
                from = org_cur[x - 1];
              }
              row_cur[x] = best;
              org_cur[x] = from;
            }
            std::swap(row_prev, row_cur);
            std::swap(org_prev, org_cur);
          }

          for (std::size_t t = out.lo[c]; t <= t1; ++t) {
            const std::size_t x = t - t0;
            const std::size_t idx = out_base + (t - out.lo[c]) * out.stride[c];
            if (row_prev[x] < tout.value[idx]) {
              tout.value[idx] = row_prev[x];
              tout.choice[idx] = code;
              tout.origin[idx] = org_prev[x];
            }
          }

          more = false;
          for (std::size_t d = C; d-- > 0;) {
            if (d == c) continue;
            if (q[d] < out.upper[d]) {
              ++q[d];
              more = true;
              break;
            }
            q[d] = out.lo[d];
          }
        }
      }
    }
    if (index + 1 < n_states) {
      std::vector<Cost>().swap(tin.value);
    }
  }

  // Backtrace from the final state at the full target lengths.
  std::size_t index = n_states - 1;
  std::vector<std::size_t> pos(C);
  for (std::size_t c = 0; c < C; ++c) pos[c] = p.targets[c].size();
  {
    const Box b = lattice.box(lattice.counts_of(index));
    std::size_t idx = 0;
    Cost extra = 0;
    for (std::size_t c = 0; c < C; ++c) {
      const std::size_t x = std::min(pos[c], b.upper[c]);
      extra += I * static_cast<Cost>(pos[c] - x);
      idx += (x - b.lo[c]) * b.stride[c];
    }
    sol.distance = clamp_cost(tables[index].value[idx] + extra);
  }
  sol.target_of_unit.assign(U, kNoTarget);
  while (index != 0) {
    auto s = lattice.counts_of(index);
    const Box b = lattice.box(s);
    std::size_t idx = 0;
    for (std::size_t c = 0; c < C; ++c) {
      pos[c] = std::min(pos[c], b.upper[c]);
      if (pos[c] < b.lo[c]) throw Error(ErrorKind::kInconsistentState, "backtrace left the box");
      idx += (pos[c] - b.lo[c]) * b.stride[c];
    }
    const std::int32_t code = tables[index].choice[idx];
    if (code < 0) throw Error(ErrorKind::kInconsistentState, "backtrace reached an unset cell");
    const std::size_t g = static_cast<std::size_t>(code) / C;
    const std::size_t c = static_cast<std::size_t>(code) % C;
    const std::size_t u = lattice.group_units(g)[s[g] - 1];
    sol.target_of_unit[u] = c;
    sol.order.push_back(u);
    pos[c] = static_cast<std::size_t>(tables[index].origin[idx]);
    index -= lattice.radix(g);
  }
  std::reverse(sol.order.begin(), sol.order.end());
  return sol;
}

Cost score_assignment(const AssignmentProblem& problem, const AssignmentSolution& solution) {
  check_problem(problem);
  if (problem.targets.empty()) return problem.costs.deletion * total_unit_words(problem);
  Cost total = 0;
  for (std::size_t c = 0; c < problem.targets.size(); ++c) {
    std::vector<Token> rows;
    for (const auto u : solution.order) {
      if (solution.target_of_unit.at(u) == c) {
        rows.insert(rows.end(), problem.units[u].begin(), problem.units[u].end());
      }
    }
    total += lev_distance(rows, problem.targets[c], problem.costs, problem.collar);
  }
  return total;
}

namespace {

// All merges of `lists` that keep each list in order.
void merges(const std::vector<std::vector<std::size_t>>& lists, std::vector<std::size_t>& pos,
            std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  bool done = true;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (pos[i] == lists[i].size()) continue;
    done = false;
    cur.push_back(lists[i][pos[i]]);
    ++pos[i];
    merges(lists, pos, cur, out);
    --pos[i];
    cur.pop_back();
  }
  if (done) out.push_back(cur);
}

// Kahn's algorithm over group chains and target chains; smallest unit first.
std::optional<std::vector<std::size_t>> global_order(
    const AssignmentProblem& p, const std::vector<std::vector<std::size_t>>& streams) {
  const std::size_t U = p.units.size();
  std::vector<std::vector<std::size_t>> succ(U);
  std::vector<std::size_t> indegree(U, 0);
  auto edge = [&](std::size_t a, std::size_t b) {
    succ[a].push_back(b);
    ++indegree[b];
  };
  std::map<std::size_t, std::size_t> last_of_group;
  for (std::size_t u = 0; u < U; ++u) {
    const auto it = last_of_group.find(p.unit_group[u]);
    if (it != last_of_group.end()) edge(it->second, u);
    last_of_group[p.unit_group[u]] = u;
  }
  for (const auto& s : streams) {
    for (std::size_t i = 1; i < s.size(); ++i) edge(s[i - 1], s[i]);
  }
  std::vector<std::size_t> order;
  std::vector<bool> emitted(U, false);
  while (order.size() < U) {
    std::size_t pick = U;
    for (std::size_t u = 0; u < U; ++u) {
      if (!emitted[u] && indegree[u] == 0) {
        pick = u;
        break;
      }
    }
    if (pick == U) return std::nullopt;
    emitted[pick] = true;
    order.push_back(pick);
    for (const auto v : succ[pick]) --indegree[v];
  }
  return order;
}

}  // namespace

std::vector<std::vector<std::vector<std::size_t>>> enumerate_assignments(
    const AssignmentProblem& problem) {
  check_problem(problem);
  const auto& p = problem;
  const std::size_t U = p.units.size();
  const std::size_t C = p.targets.size();
  if (U > 6 || C > 3) {
    throw Error(ErrorKind::kTooLarge, "exhaustive enumeration is limited to 6 units and 3 targets");
  }
  std::vector<std::vector<std::vector<std::size_t>>> out;
  if (C == 0) return out;
  const std::size_t G = group_count(p);

  std::vector<std::size_t> label(U, 0);
  while (true) {
    // Per target, every order that keeps each group's units in order.
    std::vector<std::vector<std::vector<std::size_t>>> options(C);
    for (std::size_t c = 0; c < C; ++c) {
      std::vector<std::vector<std::size_t>> lists(G);
      for (std::size_t u = 0; u < U; ++u) {
        if (label[u] == c) lists[p.unit_group[u]].push_back(u);
      }
      std::vector<std::size_t> pos(G, 0);
      std::vector<std::size_t> cur;
      merges(lists, pos, cur, options[c]);
    }
    std::vector<std::size_t> pick(C, 0);
    while (true) {
      std::vector<std::vector<std::size_t>> streams(C);
      for (std::size_t c = 0; c < C; ++c) streams[c] = options[c][pick[c]];
      if (global_order(p, streams)) out.push_back(std::move(streams));
      std::size_t c = 0;
      while (c < C && ++pick[c] == options[c].size()) pick[c++] = 0;
      if (c == C) break;
    }
    std::size_t u = 0;
    while (u < U && ++label[u] == C) label[u++] = 0;
    if (u == U) break;
  }
  return out;
}

AssignmentSolution solve_brute_force(const AssignmentProblem& problem) {
  const auto candidates = enumerate_assignments(problem);
  const auto& p = problem;
  AssignmentSolution best;
  if (p.targets.empty()) {
    best.distance = p.costs.deletion * total_unit_words(p);
    best.target_of_unit.assign(p.units.size(), kNoTarget);
    best.order.resize(p.units.size());
    std::iota(best.order.begin(), best.order.end(), std::size_t{0});
    return best;
  }
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, Cost> cache;
  best.distance = kInfiniteCost;
  const std::vector<std::vector<std::size_t>>* best_streams = nullptr;
  for (const auto& streams : candidates) {
    Cost total = 0;
    for (std::size_t c = 0; c < streams.size(); ++c) {
      auto [it, fresh] = cache.try_emplace({c, streams[c]}, 0);
      if (fresh) {
        std::vector<Token> rows;
        for (const auto u : streams[c]) {
          rows.insert(rows.end(), p.units[u].begin(), p.units[u].end());
        }
        it->second = tc_lev_full_matrix(rows, p.targets[c], p.costs, p.collar);
      }
      total = saturating_add(total, it->second);
    }
    if (total < best.distance) {
      best.distance = total;
      best_streams = &streams;
    }
  }
  best.target_of_unit.assign(p.units.size(), kNoTarget);
  for (std::size_t c = 0; c < best_streams->size(); ++c) {
    for (const auto u : (*best_streams)[c]) best.target_of_unit[u] = c;
  }
  best.order = *global_order(p, *best_streams);
  return best;
}

}  // namespace meetwer
