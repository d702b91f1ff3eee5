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

#ifndef ZEROSUM_CORE_SEARCH_HPP_
#define ZEROSUM_CORE_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "zerosum/core/counting.hpp"
#include "zerosum/core/davenport.hpp"
#include "zerosum/core/group.hpp"
#include "zerosum/core/sequence.hpp"
#include "zerosum/core/structure.hpp"
#include "zerosum/core/verification.hpp"

namespace zerosum {

// Budgets count sequences passed to count_all, not wall time.
inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

struct CatalogEntry {
  Sequence sequence;
  ExtremalSet extremal;
};

struct ExtremalCatalog {
  Group group;
  std::int64_t davenport = 1;
  std::vector<CatalogEntry> entries;
  std::int64_t max_length_found = -1;
  std::int64_t length_cap = 0;
  bool exhaustive = true;
  std::uint64_t sequences_counted = 0;
};

// Scans every 0-free S with D - 1 <= |S| <= length_cap in canonical order.
ExtremalCatalog find_extremals(const Group& g, std::int64_t davenport,
                               std::int64_t length_cap,
                               std::uint64_t budget = kDefaultBudget);

// S = T (-(U T^{-1})) 0^{m-D+1} with U maximal zero-sum free and sigma(T) = g.
Sequence construct_extremal(const Group& g, std::size_t target, std::int64_t m,
                            std::int64_t davenport,
                            std::size_t cap = kDefaultDavenportCap);

// Every zero-sum-free U of length D - 1 has all of G as subsums.
VerificationReport check_subsum_coverage(const Group& g, std::int64_t davenport,
                                         std::size_t cap = kDefaultDavenportCap);

VerificationReport conjecture1_harness(const Group& g,
                                       const DavenportOracle& oracle,
                                       std::int64_t length_cap,
                                       std::uint64_t budget = kDefaultBudget);

VerificationReport conjecture2_harness(const Group& g,
                                       const DavenportOracle& oracle,
                                       std::int64_t length_cap,
                                       std::uint64_t budget = kDefaultBudget,
                                       std::size_t subgroup_cap = 64);

// Uniform integer in [0, bound) by rejection sampling on raw generator output.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Uniform multiset of the given size over {0, ..., symbols - 1}, sorted.
std::vector<std::size_t> sample_multiset(std::mt19937_64& rng,
                                         std::size_t symbols, std::size_t length);

// Uniform multisets of nonzero elements from a seeded mt19937_64.
ExtremalCatalog random_search(const Group& g, std::int64_t davenport,
                              std::int64_t length, std::uint64_t trials,
                              std::uint64_t seed);

Json catalog_json(const ExtremalCatalog& c);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_SEARCH_HPP_
