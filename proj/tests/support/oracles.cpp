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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace meetwer::testing {

Cost oracle_lev(const std::vector<Token>& ref, const std::vector<Token>& hyp,
                const CostScheme& costs, const Collar& collar) {
  const std::size_t R = ref.size();
  const std::size_t H = hyp.size();
  std::vector<std::vector<Cost>> memo(R + 1, std::vector<Cost>(H + 1, -1));
  // d(i, j): distance between the suffixes ref[i:] and hyp[j:].
  std::function<Cost(std::size_t, std::size_t)> d = [&](std::size_t i, std::size_t j) -> Cost {
    if (memo[i][j] >= 0) return memo[i][j];
    Cost best;
    if (i == R) {
      best = costs.insertion * static_cast<Cost>(H - j);
    } else if (j == H) {
      best = costs.deletion * static_cast<Cost>(R - i);
    } else {
      best = std::min(d(i + 1, j) + costs.deletion, d(i, j + 1) + costs.insertion);
      bool near = true;
      if (collar.bounded()) {
        const double c = collar.seconds();
        near = !(ref[i].begin - hyp[j].end > c) && !(hyp[j].begin - ref[i].end > c);
      }
      if (near) {
        const Cost step = ref[i].id == hyp[j].id ? costs.correct : costs.substitution;
        best = std::min(best, d(i + 1, j + 1) + step);
      }
    }
    return memo[i][j] = best;
  };
  return d(0, 0);
}

std::vector<ScriptCost> all_edit_scripts(const std::vector<std::string>& ref,
                                         const std::vector<std::string>& hyp,
                                         const CostScheme& costs) {
  std::vector<ScriptCost> out;
  ScriptCost cur;
  cur.counts.ref_length = ref.size();
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
    if (i == ref.size() && j == hyp.size()) {
      out.push_back(cur);
      return;
    }
    if (i < ref.size() && j < hyp.size()) {
      const bool same = ref[i] == hyp[j];
      cur.cost += same ? costs.correct : costs.substitution;
      ++(same ? cur.counts.correct : cur.counts.substitutions);
      walk(i + 1, j + 1);
      --(same ? cur.counts.correct : cur.counts.substitutions);
      cur.cost -= same ? costs.correct : costs.substitution;
    }
    if (i < ref.size()) {
      cur.cost += costs.deletion;
      ++cur.counts.deletions;
      walk(i + 1, j);
      --cur.counts.deletions;
      cur.cost -= costs.deletion;
    }
    if (j < hyp.size()) {
      cur.cost += costs.insertion;
      ++cur.counts.insertions;
      walk(i, j + 1);
      --cur.counts.insertions;
      cur.cost -= costs.insertion;
    }
  };
  walk(0, 0);
  return out;
}

void label_streams(const SegLst& ref, const SegLst& hyp, TimestampMode ref_mode,
                   TimestampMode hyp_mode, LabelStreams& ref_out, LabelStreams& hyp_out) {
  std::map<std::string, int> vocab;
  auto fill = [&](const SegLst& side, TimestampMode mode, LabelStreams& out) {
    const SegLst v = validate(side);
    std::map<std::string, std::vector<Token>> by_label;
    for (const auto& s : v.segments) {
      auto& toks = by_label[s.speaker];
      if (s.has_times()) {
        for (const auto& w : pseudo_word_timestamps(s, mode)) {
          const int id = vocab.emplace(w.word, static_cast<int>(vocab.size())).first->second;
          toks.push_back({id, w.begin_time, w.end_time});
        }
      } else {
        for (const auto& w : tokenize(s)) {
          const int id = vocab.emplace(w, static_cast<int>(vocab.size())).first->second;
          toks.push_back({id, 0.0, 0.0});
        }
      }
    }
    for (auto& [label, toks] : by_label) {
      out.labels.push_back(label);
      out.tokens.push_back(std::move(toks));
    }
  };
  fill(ref, ref_mode, ref_out);
  fill(hyp, hyp_mode, hyp_out);
}

Cost oracle_cp_distance(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                        const WordTimestamps& timestamps) {
  LabelStreams r;
  LabelStreams h;
  label_streams(ref, hyp, timestamps.reference, timestamps.hypothesis, r, h);
  const std::size_t n = std::max(r.tokens.size(), h.tokens.size());
  r.tokens.resize(n);
  h.tokens.resize(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Cost best = kInfiniteCost;
  do {
    Cost total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += oracle_lev(r.tokens[i], h.tokens[perm[i]], CostScheme::unit(), collar);
    }
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

GridDer oracle_der(const SegLst& ref, const SegLst& hyp) {
  auto cells = [](const SegLst& side) {
    std::map<std::string, std::set<long>> out;
    for (const auto& s : side.segments) {
      auto& set = out[s.speaker];
      const long a = std::lround(*s.start_time * 2);
      const long b = std::lround(*s.end_time * 2);
      for (long k = a; k < b; ++k) set.insert(k);
    }
    return out;
  };
  const auto r = cells(ref);
  const auto h = cells(hyp);
  std::vector<std::set<long>> rs;
  std::vector<std::set<long>> hs;
  for (const auto& [l, s] : r) rs.push_back(s);
  for (const auto& [l, s] : h) hs.push_back(s);
  const std::size_t n = std::max(rs.size(), hs.size());
  rs.resize(n);
  hs.resize(n);
  GridDer out;
  std::set<long> grid;
  for (const auto& s : rs) {
    out.reference_activity += 0.5 * static_cast<double>(s.size());
    grid.insert(s.begin(), s.end());
  }
  for (const auto& s : hs) grid.insert(s.begin(), s.end());
  for (const long k : grid) {
    long nr = 0, nh = 0;
    for (const auto& s : rs) nr += s.count(k);
    for (const auto& s : hs) nh += s.count(k);
    out.missed += 0.5 * static_cast<double>(std::max(0L, nr - nh));
    out.false_alarm += 0.5 * static_cast<double>(std::max(0L, nh - nr));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (const long k : grid) {
      long nr = 0, nh = 0, nc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        nr += rs[i].count(k);
        nh += hs[i].count(k);
        nc += rs[i].count(k) && hs[perm[i]].count(k);
      }
      cost += 0.5 * static_cast<double>(std::max(nr, nh) - nc);
    }
    best = std::min(best, cost);
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.best_cost = n == 0 ? 0.0 : best;
  return out;
}

}  // namespace meetwer::testing
