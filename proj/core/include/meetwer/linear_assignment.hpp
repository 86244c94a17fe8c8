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

#include <cmath>
#include <cstddef>
#include <limits>
#include <type_traits>
#include <vector>

namespace meetwer {

template <typename T>
using CostMatrix = std::vector<std::vector<T>>;

// Minimum-cost perfect matching on a square matrix (Hungarian method with
// potentials, O(n^3)). Returns the column assigned to every row.
template <typename T>
std::vector<std::size_t> solve_linear_assignment(const CostMatrix<T>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  const T inf = std::numeric_limits<T>::max() / 4;
  // 1-based arrays; index 0 is the virtual start column.
  std::vector<T> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<T> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      T delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const T cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

template <typename T>
T assignment_cost(const CostMatrix<T>& cost, const std::vector<std::size_t>& row_to_col) {
  T total = 0;
  for (std::size_t i = 0; i < row_to_col.size(); ++i) total += cost[i][row_to_col[i]];
  return total;
}

// Among all optimal assignments, the one whose row->column vector is
// lexicographically smallest. Rows are fixed one at a time to the smallest
// column that still admits an optimal completion.
template <typename T>
std::vector<std::size_t> lexicographic_min_assignment(const CostMatrix<T>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  const T optimum = assignment_cost(cost, solve_linear_assignment(cost));
  const auto same = [&](T a, T b) {
    if constexpr (std::is_floating_point_v<T>) {
      return std::abs(a - b) <= T(1e-9) * std::max<T>(T(1), std::abs(b));
    } else {
      return a == b;
    }
  };

  std::vector<std::size_t> result(n);
  std::vector<bool> column_used(n, false);
  T fixed_cost = 0;
  for (std::size_t row = 0; row < n; ++row) {
    bool fixed = false;
    for (std::size_t col = 0; col < n && !fixed; ++col) {
      if (column_used[col]) continue;
      // Optimal completion of the remaining rows/columns with (row, col) fixed.
      std::vector<std::size_t> rest_cols;
      for (std::size_t c = 0; c < n; ++c) {
        if (!column_used[c] && c != col) rest_cols.push_back(c);
      }
      CostMatrix<T> sub(rest_cols.size(), std::vector<T>(rest_cols.size()));
      for (std::size_t r = row + 1; r < n; ++r) {
        for (std::size_t k = 0; k < rest_cols.size(); ++k) {
          sub[r - row - 1][k] = cost[r][rest_cols[k]];
        }
      }
      const T rest = assignment_cost(sub, solve_linear_assignment(sub));
      if (same(fixed_cost + cost[row][col] + rest, optimum)) {
        result[row] = col;
        column_used[col] = true;
        fixed_cost += cost[row][col];
        fixed = true;
      }
    }
  }
  return result;
}

}  // namespace meetwer
