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

#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"
#include "zerosum/core/counting.hpp"
#include "zerosum/core/davenport.hpp"
#include "zerosum/core/error.hpp"

using namespace zerosum;
using zs_test::grp;
using zs_test::seq;

TEST_CASE("zero-sum freeness") {
  const Group c3 = grp("C3");
  CHECK(is_zero_sum_free(seq(c3, "1^2")));
  CHECK_FALSE(is_zero_sum_free(seq(c3, "1^3")));
  CHECK(is_zero_sum_free(seq(c3, "empty")));
  CHECK_FALSE(is_zero_sum_free(seq(c3, "0")));
}

TEST_CASE("exact search matches the brute-force oracle on small groups") {
  for (const Group& g : zs_test::groups_up_to(9)) {
    CAPTURE(format_group(g));
    const DavenportResult r = davenport_exact(g);
    CHECK(r.value == oracle::davenport(g.invariants()));
    CHECK(r.method == DavenportMethod::exact);
    CHECK(r.witness.length() == static_cast<std::size_t>(r.value - 1));
    CHECK(oracle::zero_sum_free(g.invariants(), zs_test::terms_of(r.witness)));
  }
  CHECK(davenport_exact(grp("C1")).value == 1);
}

TEST_CASE("documented Davenport values") {
  CHECK(davenport_exact(grp("C3")).value == 3);
  CHECK(davenport_exact(grp("C2xC2")).value == 3);
  CHECK(davenport_exact(grp("C3xC3")).value == 5);
  CHECK(davenport_exact(grp("C2xC2xC2")).value == 4);
  CHECK(davenport_formula(grp("C6")) == 6);
  CHECK(davenport_formula(grp("C2xC4")) == 5);
  CHECK(davenport_formula(grp("C2xC2xC2")) == 4);
  CHECK_FALSE(davenport_formula(grp("C2xC2xC6")).has_value());
  CHECK(davenport(grp("C6"), DavenportMethod::formula).value == 6);
  CHECK(davenport(grp("C2xC4"), DavenportMethod::both).value == 5);
  CHECK_THROWS_AS(davenport(grp("C2xC2xC6"), DavenportMethod::formula), PreconditionError);
  CHECK(to_string(DavenportMethod::exact) == "exact-search");
  CHECK(parse_davenport_method("both") == DavenportMethod::both);
  CHECK_THROWS_AS(parse_davenport_method("guess"), ParseError);
}

TEST_CASE("cap policy") {
  CHECK_THROWS_AS(davenport_exact(grp("C2xC2xC2xC2xC2xC2")), CapExceeded);
  CHECK_THROWS_AS(davenport_exact(grp("C2xC2xC2xC2xC2xC2xC2"), 1000), CapExceeded);
  CHECK(davenport_exact(grp("C2xC2xC2xC2xC2"), 36).value == 6);
}

TEST_CASE("witness is the canonical first maximal zero-sum-free sequence") {
  for (const Group& g : zs_test::groups_up_to(16)) {
    const DavenportResult r = davenport_exact(g);
    std::optional<Sequence> first;
    for_each_zero_sum_free(g, static_cast<std::size_t>(r.value - 1), [&](const Sequence& s) {
      first = s;
      return false;
    });
    REQUIRE(first.has_value());
    CHECK(*first == r.witness);
    CHECK(for_each_zero_sum_free(g, static_cast<std::size_t>(r.value),
                                 [](const Sequence&) { return true; }) == 0);
  }
}

TEST_CASE("zero-sum-free enumeration matches filtering all multisets") {
  for (const char* spec : {"C5", "C2xC2", "C6", "C2xC4", "C3xC3"}) {
    const Group g = grp(spec);
    const std::int64_t d = davenport_exact(g).value;
    for (std::size_t len = 0; len < static_cast<std::size_t>(d); ++len) {
      std::vector<Sequence> expected;
      for (const Sequence& s : iterate_multisets(g, len, true)) {
        if (oracle::zero_sum_free(g.invariants(), zs_test::terms_of(s))) expected.push_back(s);
      }
      std::vector<Sequence> got;
      for_each_zero_sum_free(g, len, [&](const Sequence& s) {
        got.push_back(s);
        return true;
      });
      CAPTURE(spec);
      CAPTURE(len);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("formula agrees with exact search wherever both exist") {
  for (const Group& g : zs_test::groups_up_to(36)) {
    const auto f = davenport_formula(g);
    if (!f) continue;
    CAPTURE(format_group(g));
    CHECK(davenport_exact(g).value == *f);
  }
}

TEST_CASE("oracle caches and inequalities") {
  const DavenportOracle oracle;
  CHECK(oracle.value(grp("C2xC2xC6")) == davenport_exact(grp("C2xC2xC6")).value);
  CHECK(oracle.value(grp("C6")) == 6);
  const Group g = grp("C2xC4");
  const Element gens[] = {Element{{0, 2}}};
  CHECK(check_davenport_inequalities(g, subgroup_closure(g, gens), oracle).passed());
  const Group c33 = grp("C3xC3");
  const Element gens3[] = {Element{{1, 0}}};
  CHECK(check_davenport_inequalities(c33, subgroup_closure(c33, gens3), oracle).passed());
  for (const Group& gg : zs_test::groups_up_to(16)) {
    for (const Subgroup& h : all_subgroups(gg)) {
      CHECK(check_davenport_inequalities(gg, h, oracle).passed());
    }
  }
  CHECK(t_bound(grp("C3"), oracle) == 5);
  CHECK(t_bound(c33, oracle) == 13);
  CHECK(t_bound(grp("C2"), oracle) == 3);
}
