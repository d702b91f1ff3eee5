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

#ifndef ZEROSUM_CORE_SWEEPS_HPP_
#define ZEROSUM_CORE_SWEEPS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zerosum/core/davenport.hpp"
#include "zerosum/core/group.hpp"
#include "zerosum/core/search.hpp"
#include "zerosum/core/verification.hpp"

namespace zerosum {

struct SweepOptions {
  // Negative means D(G) + 3.
  std::int64_t max_len = -1;
  std::uint64_t budget = kDefaultBudget;
  std::size_t subgroup_cap = 64;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  std::size_t witness_limit = 20;
  // Family sizes exhibited when condition (iii) fails.
  std::int64_t family_k = 10;
};

// Exhaustive sweeps over sequences of bounded length. Each returns one
// aggregate report: fail on any failing case, partial when the budget cut
// the sweep short.
VerificationReport sweep_lower_bound(const Group& g, const DavenportOracle& oracle,
                                     const SweepOptions& opts);
VerificationReport sweep_one_and_all(const Group& g, const DavenportOracle& oracle,
                                     const SweepOptions& opts);
VerificationReport sweep_transform(const Group& g, const SweepOptions& opts);
VerificationReport sweep_transform_random(const Group& g, std::int64_t max_len,
                                          std::uint64_t trials,
                                          std::uint64_t seed);
VerificationReport sweep_es_chain(const Group& g, const DavenportOracle& oracle,
                                  const SweepOptions& opts);
VerificationReport sweep_subgroup_es(const Group& g, const DavenportOracle& oracle,
                                     const SweepOptions& opts);
VerificationReport sweep_odd_structure(const Group& g, const DavenportOracle& oracle,
                                       const SweepOptions& opts);
VerificationReport sweep_corollary(const Group& g, const DavenportOracle& oracle,
                                   const SweepOptions& opts);
VerificationReport sweep_equivalences(const Group& g, const DavenportOracle& oracle,
                                      const SweepOptions& opts);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_SWEEPS_HPP_
