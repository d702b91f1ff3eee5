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

#ifndef ZEROSUM_CORE_DAVENPORT_HPP_
#define ZEROSUM_CORE_DAVENPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "zerosum/core/group.hpp"
#include "zerosum/core/sequence.hpp"
#include "zerosum/core/verification.hpp"

namespace zerosum {

inline constexpr std::size_t kDefaultDavenportCap = 36;
// Subsum sets are 64-bit masks, so exact search never goes beyond this.
inline constexpr std::size_t kDavenportHardLimit = 64;

enum class DavenportMethod { exact, formula, both };

std::string_view to_string(DavenportMethod m);
DavenportMethod parse_davenport_method(std::string_view text);

struct DavenportResult {
  Group group;
  std::int64_t value = 1;
  DavenportMethod method = DavenportMethod::exact;
  // Zero-sum free, of length value - 1.
  Sequence witness{Group()};
};

bool is_zero_sum_free(const Sequence& s);

// Longest zero-sum-free sequence by exhaustive search over subsum sets.
// The returned witness is the lexicographically smallest maximal one.
DavenportResult davenport_exact(const Group& g,
                                std::size_t cap = kDefaultDavenportCap);

// d*(G) + 1 where that value is settled: cyclic groups, rank 2, p-groups.
std::optional<std::int64_t> davenport_formula(const Group& g);

// `both` runs the two routes and throws InternalError if they disagree; when
// no formula applies it degrades to `exact`.
DavenportResult davenport(const Group& g, DavenportMethod method,
                          std::size_t cap = kDefaultDavenportCap);

// Memoized D(G) lookups for harnesses: formula where settled, exact search
// otherwise (subject to cap). Safe to share between threads.
class DavenportOracle {
 public:
  explicit DavenportOracle(std::size_t cap = kDefaultDavenportCap) : cap_(cap) {}

  std::int64_t value(const Group& g) const;
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<std::int64_t>, std::int64_t> cache_;
};

// D(G) >= D(H) + D(G/H) - 1 and D(G) >= d*(G) + 1.
VerificationReport check_davenport_inequalities(const Group& g,
                                                const Subgroup& h,
                                                const DavenportOracle& oracle);

// D(G) + |G| - 1.
std::int64_t t_bound(const Group& g, const DavenportOracle& oracle);
std::int64_t t_bound(const Group& g, std::int64_t davenport);

// Calls visit on every zero-sum-free multiset over G \ {0} of exactly
// `length` terms, in canonical order, until visit returns false. Returns
// the number of sequences visited.
std::uint64_t for_each_zero_sum_free(
    const Group& g, std::size_t length,
    const std::function<bool(const Sequence&)>& visit,
    std::size_t cap = kDefaultDavenportCap);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_DAVENPORT_HPP_
