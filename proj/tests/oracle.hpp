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

// Brute-force reference implementations over raw coordinate tuples. Nothing
// here calls the library's algorithms; tests compare the two routes.

#ifndef ZEROSUM_TESTS_ORACLE_HPP_
#define ZEROSUM_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mods = std::vector<std::int64_t>;

inline Vec add(const Mods& n, const Vec& a, const Vec& b) {
  Vec out(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) out[i] = (a[i] + b[i]) % n[i];
  return out;
}

inline bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

inline std::vector<Vec> elements(const Mods& n) {
  std::vector<Vec> out{Vec(n.size(), 0)};
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::vector<Vec> next;
    for (const Vec& v : out) {
      for (std::int64_t x = 0; x < n[i]; ++x) {
        Vec w = v;
        w[i] = x;
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t order_of(const Mods& n, const Vec& a) {
  Vec x = a;
  std::int64_t k = 1;
  while (!is_zero(x)) {
    x = add(n, x, a);
    ++k;
  }
  return k;
}

// Multiset of element orders; determines a finite abelian group up to
// isomorphism.
inline std::map<std::int64_t, std::int64_t> order_profile(const Mods& n) {
  std::map<std::int64_t, std::int64_t> out;
  for (const Vec& v : elements(n)) ++out[order_of(n, v)];
  return out;
}

// Number of index subsets of terms summing to g.
inline std::uint64_t count(const Mods& n, const std::vector<Vec>& terms, const Vec& g) {
  std::uint64_t hits = 0;
  const std::uint64_t subsets = std::uint64_t{1} << terms.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Vec sum(n.size(), 0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if ((mask >> i) & 1) sum = add(n, sum, terms[i]);
    }
    if (sum == g) ++hits;
  }
  return hits;
}

inline bool zero_sum_free(const Mods& n, const std::vector<Vec>& terms) {
  return count(n, terms, Vec(n.size(), 0)) == 1;
}

// All non-decreasing lists of the given length over the items.
inline void multisets(const std::vector<Vec>& items, std::size_t length,
                      const std::function<void(const std::vector<Vec>&)>& visit) {
  std::vector<Vec> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == length) {
      visit(cur);
      return;
    }
    for (std::size_t i = start; i < items.size(); ++i) {
      cur.push_back(items[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
}

inline std::vector<Vec> nonzero(const Mods& n) {
  std::vector<Vec> out;
  for (const Vec& v : elements(n)) {
    if (!is_zero(v)) out.push_back(v);
  }
  return out;
}

// Least l such that every sequence of length l has a nonempty zero-sum
// subsequence.
inline std::int64_t davenport(const Mods& n) {
  const std::vector<Vec> items = nonzero(n);
  for (std::size_t len = 1;; ++len) {
    bool any_free = false;
    multisets(items, len, [&](const std::vector<Vec>& s) {
      if (!any_free && zero_sum_free(n, s)) any_free = true;
    });
    if (!any_free) return static_cast<std::int64_t>(len);
  }
}

// Subsets of G containing 0 and closed under addition.
inline std::size_t subgroup_count(const Mods& n) {
  const std::vector<Vec> all = elements(n);
  const std::size_t size = all.size();
  std::size_t found = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); mask += 2) {
    std::set<Vec> members;
    for (std::size_t i = 0; i < size; ++i) {
      if ((mask >> i) & 1) members.insert(all[i]);
    }
    bool closed = true;
    for (const Vec& a : members) {
      for (const Vec& b : members) {
        if (!members.contains(add(n, a, b))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) ++found;
  }
  return found;
}

// Distinct minimal zero-sum sub-multisets, each as a sorted list.
inline std::set<std::vector<Vec>> minimal_zero_sums(const Mods& n,
                                                    const std::vector<Vec>& terms) {
  const std::uint64_t subsets = std::uint64_t{1} << terms.size();
  std::vector<char> zero(subsets, 0);
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    Vec sum(n.size(), 0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if ((mask >> i) & 1) sum = add(n, sum, terms[i]);
    }
    zero[mask] = is_zero(sum);
  }
  std::set<std::vector<Vec>> out;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    if (!zero[mask]) continue;
    bool minimal = true;
    for (std::uint64_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      if (zero[sub]) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<Vec> t;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if ((mask >> i) & 1) t.push_back(terms[i]);
    }
    std::sort(t.begin(), t.end());
    out.insert(t);
  }
  return out;
}

// Determinant by cofactor expansion, for the small matrices in tests.
inline std::int64_t det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(row);
    }
    const std::int64_t term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// gcd of all k x k minors (the k-th determinantal divisor).
inline std::int64_t determinantal_divisor(const std::vector<std::vector<std::int64_t>>& m,
                                          std::size_t k) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::int64_t g = 0;
  std::vector<std::size_t> rsel, csel;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (rsel.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t r = start; r < rows; ++r) {
      rsel.push_back(r);
      pick_rows(r + 1);
      rsel.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (csel.size() == k) {
      std::vector<std::vector<std::int64_t>> sub;
      for (const std::size_t r : rsel) {
        std::vector<std::int64_t> row;
        for (const std::size_t c : csel) row.push_back(m[r][c]);
        sub.push_back(row);
      }
      g = std::gcd(g, det(sub));
      return;
    }
    for (std::size_t c = start; c < cols; ++c) {
      csel.push_back(c);
      pick_cols(c + 1);
      csel.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

}  // namespace oracle

#endif  // ZEROSUM_TESTS_ORACLE_HPP_
