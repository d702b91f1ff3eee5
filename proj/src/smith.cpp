// Copyright 2026 The zerosum Authors
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
#include <utility>

#include "zerosum/core/error.hpp"
#include "zerosum/core/group.hpp"

namespace zerosum {
namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : a_(m),
        rows_(m.size()),
        cols_(m.empty() ? 0 : m.front().size()),
        left_(identity(rows_)),
        right_(identity(cols_)) {
    for (const auto& row : m) {
      if (row.size() != cols_) throw InvalidArgument("ragged matrix");
    }
  }

  SmithForm run() {
    const std::size_t steps = std::min(rows_, cols_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_block(t)) break;
    }
    SmithForm out;
    out.diagonal.resize(steps, 0);
    for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a_[t][t];
    out.left = std::move(left_);
    out.right = std::move(right_);
    return out;
  }

 private:
  // Clears row t and column t outside the pivot and makes the pivot divide
  // the remaining block. Returns false when the remaining block is zero.
  bool reduce_block(std::size_t t) {
    while (true) {
      if (!move_smallest_to(t)) return false;
      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (a_[i][t] == 0) continue;
        const BigInt q = a_[i][t] / a_[t][t];
        add_row(i, t, -q);
        if (a_[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[t][j] == 0) continue;
        const BigInt q = a_[t][j] / a_[t][t];
        add_col(j, t, -q);
        if (a_[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows_ && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (a_[i][j] % a_[t][t] != 0) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (!divisible) continue;
      if (a_[t][t] < 0) negate_row(t);
      return true;
    }
  }

  bool move_smallest_to(std::size_t t) {
    std::size_t best_i = rows_;
    std::size_t best_j = cols_;
    BigInt best = 0;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_[i][j] == 0) continue;
        const BigInt v = abs_value(a_[i][j]);
        if (best_i == rows_ || v < best) {
          best = v;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i == rows_) return false;
    swap_rows(t, best_i);
    swap_cols(t, best_j);
    return true;
  }

  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < cols_; ++j) a_[dst][j] += k * a_[src][j];
    for (std::size_t j = 0; j < rows_; ++j) left_[dst][j] += k * left_[src][j];
  }

  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < rows_; ++i) a_[i][dst] += k * a_[i][src];
    for (std::size_t i = 0; i < cols_; ++i) {
      right_[i][dst] += k * right_[i][src];
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(a_[a], a_[b]);
    std::swap(left_[a], left_[b]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : a_) std::swap(row[a], row[b]);
    for (auto& row : right_) std::swap(row[a], row[b]);
  }

  void negate_row(std::size_t t) {
    for (auto& v : a_[t]) v = -v;
    for (auto& v : left_[t]) v = -v;
  }

  IntMatrix a_;
  std::size_t rows_;
  std::size_t cols_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return Reducer(m).run(); }

IntMatrix to_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

}  // namespace zerosum
