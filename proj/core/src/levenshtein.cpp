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

#include "meetwer/levenshtein.hpp"

#include <algorithm>
#include <cmath>

#include "meetwer/error.hpp"

namespace meetwer {

bool CostScheme::admissible() const {
  return correct < substitution && substitution <= insertion && insertion == deletion;
}

Collar::Collar(double seconds) {
  if (std::isnan(seconds) || seconds < 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "collar must be a nonnegative number of seconds");
  }
  bounded_ = !std::isinf(seconds);
  seconds_ = seconds;
}

std::optional<double> ErrorCounts::error_rate() const {
  if (ref_length == 0) return std::nullopt;
  return static_cast<double>(errors()) / static_cast<double>(ref_length);
}

ErrorCounts& ErrorCounts::operator+=(const ErrorCounts& other) {
  insertions += other.insertions;
  deletions += other.deletions;
  substitutions += other.substitutions;
  correct += other.correct;
  ref_length += other.ref_length;
  return *this;
}

std::string_view to_string(EditKind kind) {
  switch (kind) {
    case EditKind::kCorrect: return "correct";
    case EditKind::kSubstitution: return "substitution";
    case EditKind::kInsertion: return "insertion";
    case EditKind::kDeletion: return "deletion";
  }
  return "correct";
}

ErrorCounts count_edits(const AlignmentTrace& trace) {
  ErrorCounts counts;
  for (const auto& edit : trace) {
    switch (edit.kind) {
      case EditKind::kCorrect: ++counts.correct; break;
      case EditKind::kSubstitution: ++counts.substitutions; break;
      case EditKind::kInsertion: ++counts.insertions; break;
      case EditKind::kDeletion: ++counts.deletions; break;
    }
  }
  counts.ref_length = counts.correct + counts.substitutions + counts.deletions;
  return counts;
}

int Vocabulary::intern(std::string_view word) {
  auto [it, inserted] = ids_.try_emplace(std::string(word), static_cast<int>(ids_.size()));
  return it->second;
}

// ---------------------------------------------------------------------------

BandedLevenshtein::BandedLevenshtein(std::span<const Token> ref, std::span<const Token> hyp,
                                     const CostScheme& costs, const Collar& collar)
    : ref_(ref), hyp_(hyp), costs_(costs), collar_(collar) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  first_.assign(m + 1, 0);
  last_.assign(m + 1, 0);
  offset_.assign(m + 1, 0);
  frozen_value_.assign(n + 1, 0);
  frozen_column_.assign(n + 1, 0);

  // Monotone envelopes of the times, so that the per-column row ranges are
  // monotone supersets of the cells the collar permits.
  std::vector<double> ref_min_begin_suffix(n);
  std::vector<double> ref_max_end_prefix(n);
  if (collar.bounded()) {
    for (std::size_t r = n; r-- > 0;) {
      ref_min_begin_suffix[r] =
          r + 1 < n ? std::min(ref[r].begin, ref_min_begin_suffix[r + 1]) : ref[r].begin;
    }
    for (std::size_t r = 0; r < n; ++r) {
      const double e = r > 0 ? std::max(ref[r].end, ref_max_end_prefix[r - 1]) : ref[r].end;
      ref_max_end_prefix[r] = e;
    }
    for (auto& e : ref_max_end_prefix) e += collar.seconds();
  }
  std::vector<double> hyp_min_begin_suffix(m);
  for (std::size_t h = m; h-- > 0;) {
    hyp_min_begin_suffix[h] =
        h + 1 < m ? std::min(hyp[h].begin, hyp_min_begin_suffix[h + 1]) : hyp[h].begin;
  }

  values_.reserve(m + n + 1);
  values_.push_back(0);  // column 0 stores row 0; lower rows are deletions
  double hyp_max_end = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t h = j - 1;
    std::size_t lo = 0;
    std::size_t hi_count = n;  // number of rows r with a possible match
    if (collar.bounded()) {
      hyp_max_end = std::max(hyp_max_end, hyp[h].end);
      const double upper = hyp_max_end + collar.seconds();
      hi_count = static_cast<std::size_t>(
          std::upper_bound(ref_min_begin_suffix.begin(), ref_min_begin_suffix.end(), upper) -
          ref_min_begin_suffix.begin());
      lo = static_cast<std::size_t>(std::lower_bound(ref_max_end_prefix.begin(),
                                                     ref_max_end_prefix.end(),
                                                     hyp_min_begin_suffix[h]) -
                                    ref_max_end_prefix.begin());
    }
    const std::size_t a = std::min(std::max<std::size_t>(1, lo + 1), n + 1);
    const std::size_t b = std::min(std::max(hi_count, a - 1), n);

    for (std::size_t i = first_[j - 1]; i < a; ++i) {
      frozen_value_[i] = at(i, j - 1);
      frozen_column_[i] = j - 1;
    }
    first_[j] = a;
    last_[j] = b;
    offset_[j] = values_.size();
    for (std::size_t i = a; i <= b; ++i) {
      const Cost up = i == a ? at(i - 1, j) : values_.back();
      Cost best = up + costs_.deletion;
      best = std::min(best, at(i, j - 1) + costs_.insertion);
      if (permits(i - 1, h)) best = std::min(best, at(i - 1, j - 1) + match_cost(i - 1, h));
      values_.push_back(best);
    }
  }
}

bool BandedLevenshtein::permits(std::size_t r, std::size_t h) const {
  return collar_.permits(ref_[r].begin, ref_[r].end, hyp_[h].begin, hyp_[h].end);
}

Cost BandedLevenshtein::match_cost(std::size_t r, std::size_t h) const {
  return ref_[r].id == hyp_[h].id ? costs_.correct : costs_.substitution;
}

Cost BandedLevenshtein::at(std::size_t i, std::size_t j) const {
  if (i < first_[j]) {
    return frozen_value_[i] + costs_.insertion * static_cast<Cost>(j - frozen_column_[i]);
  }
  if (i > last_[j]) {
    const std::size_t b = last_[j];
    const Cost base = b >= first_[j] ? values_[offset_[j] + (b - first_[j])] : at(b, j);
    return base + costs_.deletion * static_cast<Cost>(i - b);
  }
  return values_[offset_[j] + (i - first_[j])];
}

AlignmentTrace BandedLevenshtein::backtrace() const {
  AlignmentTrace trace;
  std::size_t i = ref_.size();
  std::size_t j = hyp_.size();
  trace.reserve(i + j);
  while (i > 0 || j > 0) {
    const Cost here = at(i, j);
    if (i > 0 && j > 0 && permits(i - 1, j - 1) &&
        at(i - 1, j - 1) + match_cost(i - 1, j - 1) == here) {
      const auto kind =
          ref_[i - 1].id == hyp_[j - 1].id ? EditKind::kCorrect : EditKind::kSubstitution;
      trace.push_back({kind, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && at(i - 1, j) + costs_.deletion == here) {
      trace.push_back({EditKind::kDeletion, i - 1, std::nullopt});
      --i;
    } else {
      trace.push_back({EditKind::kInsertion, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(trace.begin(), trace.end());
  return trace;
}

// ---------------------------------------------------------------------------

Cost lev_distance(std::span<const Token> ref, std::span<const Token> hyp,
                  const CostScheme& costs, const Collar& collar) {
  if (collar.bounded()) return BandedLevenshtein(ref, hyp, costs, collar).distance();
  std::vector<Cost> row(hyp.size() + 1);
  for (std::size_t j = 0; j <= hyp.size(); ++j) row[j] = costs.insertion * static_cast<Cost>(j);
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    Cost diag = row[0];
    row[0] += costs.deletion;
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      const Cost up = row[j];
      const Cost match = ref[i - 1].id == hyp[j - 1].id ? costs.correct : costs.substitution;
      row[j] = std::min({up + costs.deletion, row[j - 1] + costs.insertion, diag + match});
      diag = up;
    }
  }
  return row.back();
}

LevenshteinResult align_tokens(std::span<const Token> ref, std::span<const Token> hyp,
                               const CostScheme& costs, const Collar& collar) {
  BandedLevenshtein matrix(ref, hyp, costs, collar);
  LevenshteinResult result;
  result.distance = matrix.distance();
  result.trace = matrix.backtrace();
  result.counts = count_edits(result.trace);
  return result;
}

std::vector<std::vector<Cost>> levenshtein_matrix(std::span<const Token> ref,
                                                  std::span<const Token> hyp,
                                                  const CostScheme& costs, const Collar& collar) {
  std::vector<std::vector<Cost>> l(ref.size() + 1, std::vector<Cost>(hyp.size() + 1, 0));
  for (std::size_t i = 0; i <= ref.size(); ++i) {
    for (std::size_t j = 0; j <= hyp.size(); ++j) {
      if (i == 0) {
        l[i][j] = costs.insertion * static_cast<Cost>(j);
        continue;
      }
      if (j == 0) {
        l[i][j] = costs.deletion * static_cast<Cost>(i);
        continue;
      }
      Cost diag = kInfiniteCost;
      if (collar.permits(ref[i - 1].begin, ref[i - 1].end, hyp[j - 1].begin, hyp[j - 1].end)) {
        diag = saturating_add(
            l[i - 1][j - 1], ref[i - 1].id == hyp[j - 1].id ? costs.correct : costs.substitution);
      }
      l[i][j] = std::min({diag, saturating_add(l[i - 1][j], costs.deletion),
                          saturating_add(l[i][j - 1], costs.insertion)});
    }
  }
  return l;
}

Cost tc_lev_full_matrix(std::span<const Token> ref, std::span<const Token> hyp,
                        const CostScheme& costs, const Collar& collar) {
  return levenshtein_matrix(ref, hyp, costs, collar).back().back();
}

// ---------------------------------------------------------------------------

LevenshteinResult lev(std::span<const std::string> ref, std::span<const std::string> hyp,
                      const CostScheme& costs) {
  Vocabulary vocab;
  std::vector<Token> r;
  std::vector<Token> h;
  for (const auto& w : ref) r.push_back({vocab.intern(w)});
  for (const auto& w : hyp) h.push_back({vocab.intern(w)});
  return align_tokens(r, h, costs, Collar::unbounded());
}

LevenshteinResult tc_lev(std::span<const WordToken> ref, std::span<const WordToken> hyp,
                         const Collar& collar, const CostScheme& costs) {
  Vocabulary vocab;
  std::vector<Token> r;
  std::vector<Token> h;
  for (const auto& w : ref) r.push_back({vocab.intern(w.word), w.begin_time, w.end_time});
  for (const auto& w : hyp) h.push_back({vocab.intern(w.word), w.begin_time, w.end_time});
  return align_tokens(r, h, costs, collar);
}

}  // namespace meetwer
