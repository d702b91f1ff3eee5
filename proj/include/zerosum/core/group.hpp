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

#ifndef ZEROSUM_CORE_GROUP_HPP_
#define ZEROSUM_CORE_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zerosum {

using BigInt = boost::multiprecision::cpp_int;

// Residue vector; coordinate i lives in [0, n_i). Elements carry no
// reference to their group, every operation takes the group explicitly.
struct Element {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;
};

// Finite abelian group C_{n_1} + ... + C_{n_r} in invariant-factor form,
// 2 <= n_1 | n_2 | ... | n_r. The trivial group has rank 0.
//
// Elements are numbered 0 .. order()-1 by mixed radix with the first
// coordinate most significant, so index order is lexicographic coordinate
// order and index 0 is zero. Most of the library works on indices.
class Group {
 public:
  Group() = default;

  // Requires an already canonical chain; use make_group() to normalize.
  static Group from_invariants(std::vector<std::int64_t> invariants);

  const std::vector<std::int64_t>& invariants() const { return invariants_; }
  std::size_t rank() const { return invariants_.size(); }
  std::size_t order() const { return order_; }
  bool is_trivial() const { return invariants_.empty(); }

  bool is_valid(const Element& e) const;
  Element zero() const { return Element{std::vector<std::int64_t>(rank(), 0)}; }
  // Reduces each coordinate into its modulus; throws on arity mismatch.
  Element reduce(std::vector<std::int64_t> coords) const;

  std::size_t index_of(const Element& e) const;
  Element element_at(std::size_t index) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t neg(std::size_t a) const;
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  std::size_t scale(std::int64_t k, std::size_t a) const;
  // table[g] = g + a for every element index g.
  std::vector<std::size_t> translation(std::size_t a) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.invariants_ == b.invariants_;
  }

 private:
  explicit Group(std::vector<std::int64_t> invariants);

  std::vector<std::int64_t> invariants_;
  std::size_t order_ = 1;
};

// Subgroup given by generators; `members` is the closure as sorted element
// indices of the ambient group.
struct Subgroup {
  std::vector<Element> generators;
  std::vector<std::size_t> members;

  std::size_t order() const { return members.size(); }
  bool contains(std::size_t index) const;
  std::vector<Element> elements(const Group& g) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members == b.members;
  }
};

// Canonical invariant-factor form of C_{spec[0]} + C_{spec[1]} + ...
Group make_group(std::span<const std::int64_t> spec);
// Grammar: "C" int ("x" "C" int)*, case-insensitive; "C1" is trivial.
Group parse_group(std::string_view text);
std::string format_group(const Group& g);

Element elem_add(const Group& g, const Element& a, const Element& b);
Element elem_neg(const Group& g, const Element& a);
Element elem_scale(const Group& g, std::int64_t k, const Element& a);
std::int64_t elem_order(const Group& g, const Element& a);
std::int64_t index_order(const Group& g, std::size_t a);

// Rank 0 prints "()", rank 1 a bare integer, higher ranks "(a,b,...)".
std::string format_element(const Group& g, const Element& e);
std::string format_index(const Group& g, std::size_t index);
// Accepts a bare integer (rank <= 1) or a parenthesized tuple.
Element parse_element(const Group& g, std::string_view text);

std::vector<Element> all_elements(const Group& g);

std::vector<Subgroup> order_two_subgroups(const Group& g);
Subgroup subgroup_closure(const Group& g, std::span<const Element> generators);
Subgroup subgroup_closure_indices(const Group& g,
                                  std::span<const std::size_t> generators);
// Every subgroup exactly once, ordered by (order, member list).
std::vector<Subgroup> all_subgroups(const Group& g, std::size_t cap = 64);

// Isomorphism type of a subgroup, recovered from its p-power torsion counts.
Group subgroup_structure(const Group& g, const Subgroup& h);

std::int64_t d_star(const Group& g);

// ---- Smith normal form ----------------------------------------------------

using IntMatrix = std::vector<std::vector<BigInt>>;

// left * input * right = diag(diagonal), with left and right unimodular.
// diagonal has min(rows, cols) entries, nonnegative, each dividing the next
// (zeros last).
struct SmithForm {
  std::vector<BigInt> diagonal;
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);
IntMatrix to_matrix(const std::vector<std::vector<std::int64_t>>& rows);

// ---- Quotients -------------------------------------------------------------

// G/H with the canonical projection G -> G/H.
class Quotient {
 public:
  Quotient(Group source, Group target,
           std::vector<std::vector<std::int64_t>> rows);

  const Group& source() const { return source_; }
  const Group& group() const { return target_; }
  Element project(const Element& e) const;
  std::size_t project_index(std::size_t index) const;

 private:
  Group source_;
  Group target_;
  // One row per target coordinate, entries already reduced mod that
  // coordinate's invariant.
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> index_map_;
};

Quotient quotient_group(const Group& g, const Subgroup& h);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_GROUP_HPP_
