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
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "meetwer/seglst.hpp"

namespace meetwer {

using Cost = std::int64_t;

// Strictly larger than any distance reachable on real inputs and small enough
// that adding two of them does not overflow.
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max() / 4;

constexpr Cost saturating_add(Cost a, Cost b) {
  return (a >= kInfiniteCost || b >= kInfiniteCost || a + b >= kInfiniteCost) ? kInfiniteCost
                                                                              : a + b;
}

struct CostScheme {
  Cost insertion = 1;
  Cost deletion = 1;
  Cost substitution = 1;
  Cost correct = 0;

  static constexpr CostScheme unit() { return {}; }
  // Weights that break ties towards substitutions; distances differ from the
  // unit scheme, error counts of the resulting trace usually do not.
  static constexpr CostScheme prefer_substitutions() { return {4, 4, 3, 0}; }

  // correct < substitution <= insertion == deletion
  bool admissible() const;
  // Exchanges the insertion and deletion weights, for role-swapped searches.
  CostScheme swapped() const { return {deletion, insertion, substitution, correct}; }

  bool operator==(const CostScheme&) const = default;
};

// Maximum temporal gap between two words that may still be matched.
class Collar {
 public:
  static Collar unbounded() { return Collar(); }
  explicit Collar(double seconds);

  bool bounded() const { return bounded_; }
  double seconds() const { return seconds_; }

  bool permits(double ref_begin, double ref_end, double hyp_begin, double hyp_end) const {
    return !bounded_ || (ref_begin <= hyp_end + seconds_ && hyp_begin <= ref_end + seconds_);
  }

  bool operator==(const Collar&) const = default;

 private:
  Collar() = default;
  bool bounded_ = false;
  double seconds_ = std::numeric_limits<double>::infinity();
};

struct ErrorCounts {
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t substitutions = 0;
  std::size_t correct = 0;
  std::size_t ref_length = 0;

  std::size_t errors() const { return insertions + deletions + substitutions; }
  // Undefined for an empty reference.
  std::optional<double> error_rate() const;

  ErrorCounts& operator+=(const ErrorCounts& other);
  friend ErrorCounts operator+(ErrorCounts a, const ErrorCounts& b) { return a += b; }
  bool operator==(const ErrorCounts&) const = default;
};

enum class EditKind { kCorrect, kSubstitution, kInsertion, kDeletion };

std::string_view to_string(EditKind kind);

struct Edit {
  EditKind kind;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  bool operator==(const Edit&) const = default;
};

using AlignmentTrace = std::vector<Edit>;

ErrorCounts count_edits(const AlignmentTrace& trace);

struct LevenshteinResult {
  Cost distance = 0;
  ErrorCounts counts;
  AlignmentTrace trace;
};

LevenshteinResult lev(std::span<const std::string> ref, std::span<const std::string> hyp,
                      const CostScheme& costs = CostScheme::unit());

LevenshteinResult tc_lev(std::span<const WordToken> ref, std::span<const WordToken> hyp,
                         const Collar& collar, const CostScheme& costs = CostScheme::unit());

// Integer-coded word with its time span. Untimed words are only ever compared
// under an unbounded collar, where the times are ignored.
struct Token {
  int id = 0;
  double begin = 0.0;
  double end = 0.0;
};

class Vocabulary {
 public:
  int intern(std::string_view word);
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<std::string, int> ids_;
};

// Distance only. Unbounded collars use two rolling rows; bounded collars use
// the banded matrix below.
Cost lev_distance(std::span<const Token> ref, std::span<const Token> hyp,
                  const CostScheme& costs = CostScheme::unit(),
                  const Collar& collar = Collar::unbounded());

LevenshteinResult align_tokens(std::span<const Token> ref, std::span<const Token> hyp,
                               const CostScheme& costs = CostScheme::unit(),
                               const Collar& collar = Collar::unbounded());

// Plain full-matrix recursion with forbidden matches at infinite cost. Kept
// as the reference the banded computation is checked against.
Cost tc_lev_full_matrix(std::span<const Token> ref, std::span<const Token> hyp,
                        const CostScheme& costs, const Collar& collar);

// Full (dim(ref)+1) x (dim(hyp)+1) distance matrix, row = ref prefix length.
std::vector<std::vector<Cost>> levenshtein_matrix(std::span<const Token> ref,
                                                  std::span<const Token> hyp,
                                                  const CostScheme& costs = CostScheme::unit(),
                                                  const Collar& collar = Collar::unbounded());

// Levenshtein matrix restricted to the band of cells where a match can occur
// under the collar. Cells above the band of a column only ever extend the
// previous column by an insertion and cells below only extend the last band
// cell by deletions, so both are reconstructed in O(1) from stored values.
class BandedLevenshtein {
 public:
  BandedLevenshtein(std::span<const Token> ref, std::span<const Token> hyp,
                    const CostScheme& costs, const Collar& collar);

  // Row i = ref prefix length, column j = hyp prefix length.
  Cost at(std::size_t i, std::size_t j) const;
  Cost distance() const { return at(ref_.size(), hyp_.size()); }
  // Ties prefer the diagonal, then deletion, then insertion.
  AlignmentTrace backtrace() const;
  std::size_t stored_cells() const { return values_.size(); }

 private:
  bool permits(std::size_t r, std::size_t h) const;
  Cost match_cost(std::size_t r, std::size_t h) const;

  std::span<const Token> ref_;
  std::span<const Token> hyp_;
  CostScheme costs_;
  Collar collar_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> last_;
  std::vector<std::size_t> offset_;
  std::vector<Cost> values_;
  std::vector<Cost> frozen_value_;
  std::vector<std::size_t> frozen_column_;
};

}  // namespace meetwer
