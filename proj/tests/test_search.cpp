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
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"
#include "zerosum/core/counting.hpp"
#include "zerosum/core/error.hpp"
#include "zerosum/core/search.hpp"

using namespace zerosum;
using zs_test::grp;
using zs_test::seq;

namespace {

std::vector<std::string> names(const ExtremalCatalog& c) {
  std::vector<std::string> out;
  for (const CatalogEntry& e : c.entries) out.push_back(format_sequence(e.sequence));
  return out;
}

}  // namespace

TEST_CASE("extremal catalogs of the documented examples") {
  const ExtremalCatalog c3 = find_extremals(grp("C3"), 3, 5);
  CHECK(names(c3) == std::vector<std::string>{"1^2", "2^2", "1^3", "2^3"});
  CHECK(c3.max_length_found == 3);
  CHECK(c3.exhaustive);
  const ExtremalCatalog c2 = find_extremals(grp("C2"), 2, 6);
  CHECK(names(c2) == std::vector<std::string>{"1", "1^2", "1^3", "1^4", "1^5", "1^6"});
  const Group g = grp("C3xC3");
  const ExtremalCatalog c33 = find_extremals(g, 5, 7);
  const auto n33 = names(c33);
  CHECK(std::find(n33.begin(), n33.end(), format_sequence(seq(g, "(1,0)^3 (0,1)^3"))) != n33.end());
  CHECK(c33.max_length_found == 6);
}

TEST_CASE("catalog entries re-verify and are complete under another order") {
  for (const char* spec : {"C4", "C5", "C2xC2", "C6", "C2xC4", "C3xC3"}) {
    const Group g = grp(spec);
    const std::int64_t d = davenport_exact(g).value;
    const std::int64_t cap = d + 2;
    const ExtremalCatalog c = find_extremals(g, d, cap);
    CHECK(c.exhaustive);
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      const Sequence& s = c.entries[i].sequence;
      CHECK_FALSE(s.contains_zero());
      const auto raw = zs_test::terms_of(s);
      CHECK(BigInt(oracle::count(g.invariants(), raw, oracle::Vec(g.rank(), 0))) ==
            pow2(static_cast<std::int64_t>(s.length()) - d + 1));
      if (i > 0) CHECK(canonical_less(c.entries[i - 1].sequence, s));
    }
    // Independent enumeration over the nonzero elements in reverse order.
    std::vector<oracle::Vec> items = oracle::nonzero(g.invariants());
    std::reverse(items.begin(), items.end());
    std::set<std::vector<oracle::Vec>> expected;
    for (std::int64_t len = d - 1; len <= cap; ++len) {
      oracle::multisets(items, static_cast<std::size_t>(len), [&](const std::vector<oracle::Vec>& s) {
        if (BigInt(oracle::count(g.invariants(), s, oracle::Vec(g.rank(), 0))) == pow2(len - d + 1)) {
          std::vector<oracle::Vec> sorted = s;
          std::sort(sorted.begin(), sorted.end());
          expected.insert(sorted);
        }
      });
    }
    std::set<std::vector<oracle::Vec>> got;
    for (const CatalogEntry& e : c.entries) got.insert(zs_test::terms_of(e.sequence));
    CAPTURE(spec);
    CHECK(got == expected);
  }
}

TEST_CASE("budget truncation is flagged") {
  const ExtremalCatalog c = find_extremals(grp("C3xC3"), 5, 7, 100);
  CHECK_FALSE(c.exhaustive);
  CHECK(c.sequences_counted == 100);
}

TEST_CASE("constructed extremal sequences") {
  const Group c5 = grp("C5");
  CHECK(construct_extremal(c5, 2, 6, 5) == seq(c5, "0^2 1^2 4^2"));
  CHECK(construct_extremal(c5, 0, 4, 5) == seq(c5, "4^4"));
  CHECK_THROWS_AS(construct_extremal(c5, 1, 3, 5), PreconditionError);
  for (const Group& g : zs_test::groups_up_to(12)) {
    const std::int64_t d = davenport_exact(g).value;
    for (std::size_t target = 0; target < g.order(); ++target) {
      for (std::int64_t m = d - 1; m <= d + 1; ++m) {
        const Sequence s = construct_extremal(g, target, m, d);
        CHECK(s.length() == static_cast<std::size_t>(m));
        CHECK(oracle::count(g.invariants(), zs_test::terms_of(s), g.element_at(target).coords) ==
              (std::uint64_t{1} << (m - d + 1)));
      }
    }
  }
}

TEST_CASE("maximal zero-sum-free sequences reach every element") {
  for (const Group& g : zs_test::groups_up_to(16)) {
    CHECK(check_subsum_coverage(g, davenport_exact(g).value).passed());
  }
}

TEST_CASE("conjecture 1 harness") {
  const DavenportOracle oracle;
  const VerificationReport a = conjecture1_harness(grp("C3xC3"), oracle, 7);
  CHECK(a.passed());
  CHECK(a.message == "no counterexample up to cap 7");
  CHECK(conjecture1_harness(grp("C4"), oracle, 8).passed());
  CHECK(conjecture1_harness(grp("C5"), oracle, 8).passed());
  const VerificationReport v = conjecture1_harness(grp("C2xC2"), oracle, 6);
  CHECK(v.verdict == Verdict::skipped);
  CHECK(v.details["qualifies"] == false);
  for (const auto& r : {a, v}) CHECK(r.message.find("proved") == std::string::npos);
}

TEST_CASE("conjecture 2 harness") {
  const DavenportOracle oracle;
  const VerificationReport a = conjecture2_harness(grp("C3xC3"), oracle, 7);
  CHECK(a.passed());
  CHECK(a.details["max_length"] == 6);
  CHECK(a.details["bound"] == 6);
  CHECK(a.details["witness"] == "(0,1)^3 (1,0)^3");
  CHECK(a.details["witness_qualifies"] == true);
  const VerificationReport b = conjecture2_harness(grp("C5"), oracle, 7);
  CHECK(b.details["max_length"] == 5);
  CHECK(b.details["witness"] == "1^5");
  CHECK(b.details["witness_extremal"] == true);
  CHECK(b.message.find("no counterexample up to cap 7") == 0);
  // Every E(S) over C2xC2 that is nonempty contains a nontrivial subgroup.
  const VerificationReport v = conjecture2_harness(grp("C2xC2"), oracle, 6);
  CHECK(v.passed());
  CHECK(v.details["max_length"] == -1);
  CHECK(v.details["witness_extremal"] == true);
  CHECK(v.details["witness_qualifies"] == false);
  CHECK_THROWS_AS(conjecture2_harness(grp("C5"), oracle, 5), PreconditionError);
}

TEST_CASE("random search is seeded and reproducible") {
  CHECK(random_search(grp("C5"), 5, 6, 0, 1).entries.empty());
  const Group v = grp("C2xC2");
  const ExtremalCatalog a = random_search(v, 3, 10, 10000, 1);
  const ExtremalCatalog b = random_search(v, 3, 10, 10000, 1);
  CHECK(names(a) == names(b));
  CHECK_FALSE(a.entries.empty());
  CHECK_FALSE(a.exhaustive);
  CHECK(a.sequences_counted == 10000);
  for (const CatalogEntry& e : a.entries) {
    CHECK(e.sequence.length() == 10);
    CHECK_FALSE(e.sequence.contains_zero());
    CHECK(count_all(e.sequence)[0] == pow2(8));
  }
  const auto n = names(a);
  CHECK(std::find(n.begin(), n.end(), "(0,1) (1,0) (1,1)^8") != n.end());
}

TEST_CASE("multiset sampling is uniform over multisets") {
  std::mt19937_64 rng(42);
  std::map<std::vector<std::size_t>, int> freq;
  const int trials = 60000;
  for (int i = 0; i < trials; ++i) ++freq[sample_multiset(rng, 3, 3)];
  CHECK(freq.size() == 10);
  for (const auto& [k, v] : freq) {
    CHECK(std::abs(v - trials / 10) < 600);
  }
  CHECK(sample_multiset(rng, 4, 0).empty());
}
