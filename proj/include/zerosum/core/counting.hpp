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

#ifndef ZEROSUM_CORE_COUNTING_HPP_
#define ZEROSUM_CORE_COUNTING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "zerosum/core/group.hpp"
#include "zerosum/core/sequence.hpp"
#include "zerosum/core/verification.hpp"

namespace zerosum {

// N_g(S) for every g, indexed by element index.
class CountVector {
 public:
  CountVector(Group group, std::vector<BigInt> counts,
              std::size_t source_length);

  const Group& group() const { return group_; }
  const BigInt& operator[](std::size_t index) const { return counts_[index]; }
  const BigInt& at(const Element& e) const;
  const std::vector<BigInt>& values() const { return counts_; }
  std::size_t source_length() const { return source_length_; }
  BigInt total() const;

 private:
  Group group_;
  std::vector<BigInt> counts_;
  std::size_t source_length_;
};

// 2^e for e >= 0.
BigInt pow2(std::int64_t e);

// Exact N_g(S) for all g via new[g] = old[g] + old[g - a], one occurrence
// at a time.
CountVector count_all(const Sequence& s);

// Called with every result of count_all; returns the previous observer.
// Not synchronized: install before any counting starts.
using CountObserver = std::function<void(const CountVector&)>;
CountObserver set_count_observer(CountObserver o);

// Enumerates all 2^|S| index subsets. Independent oracle for count_all.
inline constexpr std::size_t kBruteForceCap = 25;
std::uint64_t count_brute(const Sequence& s, const Element& g);

// Sigma-bullet(S): reachable subsums including 0, by a boolean DP.
std::vector<std::size_t> subsums(const Sequence& s);

// E(S) = { g : N_g(S) = 2^{|S| - D + 1} }, defined for |S| >= D - 1.
struct ExtremalSet {
  Group group;
  std::vector<std::size_t> members;
  std::int64_t bound_exponent = 0;

  bool contains(std::size_t index) const;
  bool empty() const { return members.empty(); }
};

// Throws PreconditionError when |S| < D - 1.
void require_extremal_domain(std::size_t length, std::int64_t davenport);
ExtremalSet extremal_set(const Sequence& s, std::int64_t davenport);
ExtremalSet extremal_set(const CountVector& counts, std::int64_t davenport);

// W = T * (-(S T^{-1})), so that N_{sigma(T)}(S) = N_0(W).
Sequence transform(const Sequence& s, const Sequence& t);

VerificationReport check_lower_bound(const Sequence& s, std::int64_t davenport);
VerificationReport check_lower_bound(const CountVector& counts,
                                     std::int64_t davenport);
VerificationReport check_transform(const Sequence& s, const Sequence& t);
VerificationReport check_one_and_all(const Sequence& s, std::int64_t davenport);
VerificationReport check_one_and_all(const CountVector& counts,
                                     std::int64_t davenport);
// sum_{h in H} N_h(S) against N_0(phi(S)) over G/H.
VerificationReport pushforward_counts(const Sequence& s, const Subgroup& h);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_COUNTING_HPP_
