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
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"
#include "zerosum/core/error.hpp"
#include "zerosum/core/group.hpp"

using namespace zerosum;
using zs_test::grp;

TEST_CASE("group specs normalize to invariant factors") {
  CHECK(format_group(grp("C2xC3")) == "C6");
  CHECK(format_group(grp("C4xC2")) == "C2xC4");
  CHECK(format_group(grp("c6 x c4")) == "C2xC12");
  CHECK(format_group(grp("C3x C3")) == "C3xC3");
  CHECK(format_group(grp("C1")) == "C1");
  CHECK(format_group(grp("C1xC1")) == "C1");
  CHECK(grp("C1").is_trivial());
  CHECK(grp("C1").order() == 1);
  CHECK(grp("C2xC3").order() == 6);
  CHECK(d_star(grp("C2xC3")) == 5);
  CHECK(d_star(grp("C3xC3")) == 4);
  CHECK(d_star(grp("C1")) == 0);
}

TEST_CASE("malformed specs are rejected") {
  CHECK_THROWS_AS(grp("C0"), ParseError);
  CHECK_THROWS_AS(grp(""), ParseError);
  CHECK_THROWS_AS(grp("D4"), ParseError);
  CHECK_THROWS_AS(grp("C2xx3"), ParseError);
  CHECK_THROWS_AS(grp("C-2"), ParseError);
  const std::int64_t bad[] = {3, 0};
  CHECK_THROWS_AS(make_group(bad), InvalidArgument);
  CHECK_THROWS_AS(Group::from_invariants({4, 2}), InvalidArgument);
}

TEST_CASE("normalization preserves the isomorphism class") {
  // Element-order statistics determine a finite abelian group.
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = 1; b <= 12; ++b) {
      for (std::int64_t c = 1; c <= 4; ++c) {
        if (a * b * c > 72) continue;
        const std::int64_t spec[] = {a, b, c};
        const Group g = make_group(spec);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        REQUIRE(g.order() == static_cast<std::size_t>(a * b * c));
        const auto& inv = g.invariants();
        for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
        CHECK(oracle::order_profile(inv) == oracle::order_profile({a, b, c}));
      }
    }
  }
}

TEST_CASE("index order is lexicographic with zero first") {
  const Group g = grp("C2xC4");
  const auto all = all_elements(g);
  REQUIRE(all.size() == 8);
  CHECK(all.front() == g.zero());
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (std::size_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
  CHECK(format_element(g, g.element_at(5)) == "(1,1)");
  CHECK(format_element(grp("C5"), Element{{3}}) == "3");
  CHECK(format_element(grp("C1"), grp("C1").zero()) == "()");
}

TEST_CASE("index arithmetic agrees with coordinate arithmetic") {
  for (const Group& g : zs_test::groups_up_to(16)) {
    const oracle::Mods n = g.invariants();
    for (std::size_t a = 0; a < g.order(); ++a) {
      const Element ea = g.element_at(a);
      CHECK(index_order(g, a) == oracle::order_of(n, ea.coords));
      CHECK(g.add(a, g.neg(a)) == 0);
      CHECK(g.scale(index_order(g, a), a) == 0);
      for (std::size_t b = 0; b < g.order(); b += 3) {
        const Element eb = g.element_at(b);
        CHECK(g.element_at(g.add(a, b)).coords == oracle::add(n, ea.coords, eb.coords));
        CHECK(elem_add(g, ea, eb) == g.element_at(g.add(a, b)));
      }
    }
    const auto shift = g.translation(1 % g.order());
    std::vector<std::size_t> sorted(shift);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> iota(g.order());
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(sorted == iota);
  }
}

TEST_CASE("elements parse with reduction and arity checks") {
  const Group g = grp("C3xC3");
  CHECK(parse_element(g, "(1,2)") == Element{{1, 2}});
  CHECK(parse_element(g, "( 4 , -1 )") == Element{{1, 2}});
  CHECK_THROWS_AS(parse_element(g, "(1,2,0)"), ParseError);
  CHECK_THROWS_AS(parse_element(g, "1"), ParseError);
  CHECK_THROWS_AS(parse_element(g, "(1,"), ParseError);
  CHECK(parse_element(grp("C5"), "7") == Element{{2}});
  CHECK(elem_order(g, Element{{1, 0}}) == 3);
  CHECK(elem_neg(g, Element{{1, 2}}) == Element{{2, 1}});
  CHECK(elem_scale(g, 2, Element{{1, 2}}) == Element{{2, 1}});
}

TEST_CASE("subgroup enumeration matches the subset-closure oracle") {
  for (const Group& g : zs_test::groups_up_to(16)) {
    CAPTURE(format_group(g));
    const auto subs = all_subgroups(g);
    CHECK(subs.size() == oracle::subgroup_count(g.invariants()));
    for (const Subgroup& h : subs) {
      CHECK(g.order() % h.order() == 0);
      CHECK(h.contains(0));
      for (const std::size_t a : h.members) {
        for (const std::size_t b : h.members) CHECK(h.contains(g.add(a, b)));
      }
    }
  }
  CHECK(all_subgroups(grp("C6")).size() == 4);
  CHECK(all_subgroups(grp("C2xC2")).size() == 5);
  CHECK_THROWS_AS(all_subgroups(grp("C2xC2xC2xC2xC2xC2xC2"), 64), CapExceeded);
}

TEST_CASE("order-two subgroups") {
  CHECK(order_two_subgroups(grp("C3xC3")).empty());
  CHECK(order_two_subgroups(grp("C2xC2")).size() == 3);
  CHECK(order_two_subgroups(grp("C2xC4")).size() == 3);
  CHECK(order_two_subgroups(grp("C4")).size() == 1);
}

TEST_CASE("smith normal form satisfies its defining identities") {
  const std::vector<std::vector<std::vector<std::int64_t>>> cases = {
      {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}},
      {{4, 0}, {0, 6}},
      {{2, 0, 1}, {0, 4, 2}},
      {{0, 0}, {0, 0}},
      {{12}},
      {{6, 0, 0, 3}, {0, 10, 0, 5}, {0, 0, 15, 0}},
  };
  for (const auto& rows : cases) {
    const SmithForm f = smith_normal_form(to_matrix(rows));
    const std::size_t m = rows.size();
    const std::size_t n = rows[0].size();
    const IntMatrix a = to_matrix(rows);
    // left * a * right == diag
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt v = 0;
        for (std::size_t k = 0; k < m; ++k) {
          for (std::size_t l = 0; l < n; ++l) v += f.left[i][k] * a[k][l] * f.right[l][j];
        }
        const BigInt expect = (i == j && i < f.diagonal.size()) ? f.diagonal[i] : BigInt(0);
        CHECK(v == expect);
      }
    }
    // Divisibility chain and determinantal divisors d_1 ... d_k.
    BigInt product = 1;
    for (std::size_t k = 0; k < f.diagonal.size(); ++k) {
      CHECK(f.diagonal[k] >= 0);
      if (k + 1 < f.diagonal.size() && f.diagonal[k] != 0) {
        CHECK(f.diagonal[k + 1] % f.diagonal[k] == 0);
      }
      product *= f.diagonal[k];
      CHECK(product == oracle::determinantal_divisor(rows, k + 1));
    }
  }
}

TEST_CASE("quotients by subgroups") {
  const Group g = grp("C2xC4");
  const Element gens[] = {Element{{0, 2}}};
  const Subgroup h = subgroup_closure(g, gens);
  const Quotient q = quotient_group(g, h);
  CHECK(format_group(q.group()) == "C2xC2");
  CHECK(format_group(subgroup_structure(g, h)) == "C2");

  for (const Group& gg : zs_test::groups_up_to(16)) {
    for (const Subgroup& hh : all_subgroups(gg)) {
      const Quotient qq = quotient_group(gg, hh);
      CAPTURE(format_group(gg));
      REQUIRE(qq.group().order() * hh.order() == gg.order());
      // Homomorphism with kernel exactly H.
      for (std::size_t a = 0; a < gg.order(); ++a) {
        CHECK((qq.project_index(a) == 0) == hh.contains(a));
        for (std::size_t b = 0; b < gg.order(); b += 5) {
          CHECK(qq.project_index(gg.add(a, b)) ==
                qq.group().add(qq.project_index(a), qq.project_index(b)));
        }
      }
      CHECK(subgroup_structure(gg, hh).order() == hh.order());
    }
  }
}
