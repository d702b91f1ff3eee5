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

#ifndef ZEROSUM_CORE_SEQUENCE_HPP_
#define ZEROSUM_CORE_SEQUENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zerosum/core/group.hpp"

namespace zerosum {

// A sequence over G is a finite multiset of elements. Storage is a dense
// multiplicity vector indexed by element index; counting code treats equal
// terms as distinct occurrences.
class Sequence {
 public:
  explicit Sequence(Group group);
  // Terms given as element indices, in any order and with repetition.
  static Sequence from_indices(Group group, std::span<const std::size_t> terms);
  static Sequence from_elements(Group group, std::span<const Element> terms);

  const Group& group() const { return group_; }
  std::size_t length() const { return length_; }
  bool empty() const { return length_ == 0; }

  std::uint64_t multiplicity(std::size_t index) const { return mult_.at(index); }
  std::uint64_t multiplicity(const Element& e) const;
  const std::vector<std::uint32_t>& multiplicities() const { return mult_; }
  // Distinct elements present, in canonical order.
  std::vector<std::size_t> support() const;
  // Every occurrence, sorted.
  std::vector<std::size_t> terms() const;
  bool contains_zero() const { return mult_[0] > 0; }

  void add(std::size_t index, std::uint64_t count = 1);
  void remove(std::size_t index, std::uint64_t count = 1);

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.group_ == b.group_ && a.mult_ == b.mult_;
  }

 private:
  Group group_;
  std::vector<std::uint32_t> mult_;
  std::size_t length_ = 0;
};

// Canonical sort key: shorter first, then lexicographic on sorted terms.
bool canonical_less(const Sequence& a, const Sequence& b);

// Grammar: "empty" | term (" " term)*, term := element ("^" posint)?.
Sequence parse_sequence(const Group& g, std::string_view text);
std::string format_sequence(const Sequence& s);

std::size_t seq_sum_index(const Sequence& s);
Element seq_sum(const Sequence& s);
bool divides(const Sequence& t, const Sequence& s);
Sequence seq_gcd(std::span<const Sequence> sequences);
Sequence seq_gcd(const Sequence& a, const Sequence& b);
Sequence seq_mul(const Sequence& a, const Sequence& b);
// s * t^{-1}; requires divides(t, s).
Sequence seq_div(const Sequence& s, const Sequence& t);
Sequence seq_neg(const Sequence& s);
// s * a^{-1} for a single occurrence of a.
Sequence remove_term(const Sequence& s, std::size_t index);

BigInt multichoose(std::uint64_t n, std::uint64_t k);

// Restartable stream of every multiset of a fixed length over G (or
// G \ {0}), in lexicographic order of the sorted term lists.
class MultisetStream {
 public:
  MultisetStream(Group group, std::size_t length, bool exclude_zero);

  // Advances; returns false once the stream is exhausted.
  bool next();
  // Sorted element indices of the current multiset.
  const std::vector<std::size_t>& terms() const { return terms_; }
  Sequence current() const;
  void reset();
  BigInt total() const;

 private:
  Group group_;
  std::size_t length_;
  std::vector<std::size_t> allowed_;
  std::vector<std::size_t> positions_;
  std::vector<std::size_t> terms_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Sequence> iterate_multisets(const Group& g, std::size_t length,
                                        bool exclude_zero);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_SEQUENCE_HPP_
