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

#ifndef ZEROSUM_CORE_STRUCTURE_HPP_
#define ZEROSUM_CORE_STRUCTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zerosum/core/counting.hpp"
#include "zerosum/core/davenport.hpp"
#include "zerosum/core/group.hpp"
#include "zerosum/core/sequence.hpp"
#include "zerosum/core/verification.hpp"

namespace zerosum {

inline constexpr std::size_t kMinimalZeroSumCap = 25;

// T != empty, sigma(T) = 0 and T a^{-1} zero-sum free for every a in supp(T).
bool is_minimal_zero_sum(const Sequence& t);

// Every minimal zero-sum subsequence of S, each multiset listed once, in
// canonical order.
std::vector<Sequence> minimal_zero_sums(const Sequence& s);

// Number of index subsets of S whose multiset is T: prod_a C(v_a(S), v_a(T)).
BigInt occurrences(const Sequence& t, const Sequence& s);

struct MinZeroSumReport {
  Sequence sequence;
  std::vector<Sequence> minimals;
  // Multiset level: gcd(T_i, T_j) is empty for every pair.
  bool pairwise_disjoint = true;
  // Minimal zero-sum subsequences counted with the multiplicity of their
  // appearance in S.
  BigInt index_level_count = 0;
  // |S| - D(G) + 1
  std::int64_t expected_count = 0;

  // Exactly expected_count minimal zero-sum subsequences, pairwise disjoint.
  bool disjoint_decomposition() const;
};

MinZeroSumReport minimal_zero_sum_report(const Sequence& s,
                                         std::int64_t davenport);

VerificationReport check_odd_group_structure(const Sequence& s,
                                             std::int64_t davenport);
VerificationReport check_corollary_decomposition(const Sequence& s,
                                                 std::int64_t davenport);
// E(S) + {0, -a} inside E(S a^{-1}).
VerificationReport check_es_chain(const Sequence& s, const Element& a,
                                  std::int64_t davenport);

struct ExtremalSubgroups {
  std::vector<Subgroup> contained;
  std::vector<bool> maximal;
  VerificationReport verdict;
};

// Subgroups of G inside E; each nontrivial one must be elementary abelian of
// exponent 2 with D(G) = D(G/H) + rank(H).
ExtremalSubgroups max_subgroups_in_extremal_set(const ExtremalSet& e,
                                                std::int64_t davenport,
                                                const DavenportOracle& oracle,
                                                std::size_t cap = 64);

struct ConditionProfile {
  Group group;
  std::int64_t davenport = 1;
  // D(G) >= D(G/H) + 2 for every H of order 2.
  bool cond_iii = true;
  std::int64_t t = 0;
  std::optional<Subgroup> offending_h;
};

ConditionProfile condition_profile(const Group& g, const DavenportOracle& oracle);

// S h^k where phi(S) is a minimal zero-sum sequence over G/H of length
// D(G/H) and sigma(S) = h. Requires H = {0, h} and D(G) = D(G/H) + 1; the
// result satisfies N_0 = N_h = 2^{|S h^k| - D(G) + 1} (checked).
Sequence construct_unbounded_family(const Group& g, const Subgroup& h,
                                    std::int64_t k,
                                    const DavenportOracle& oracle);

// Over C_n (n >= 3) the extremal 0-free sequences of length <= max_len are
// exactly a^{n-1} and a^n for generators a. n = 2 is handled separately:
// every 1^k is extremal there.
VerificationReport check_cyclic_characterization(std::int64_t n,
                                                 std::int64_t max_len);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_STRUCTURE_HPP_
