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

#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"
#include "zerosum/core/counting.hpp"
#include "zerosum/core/davenport.hpp"
#include "zerosum/core/error.hpp"

using namespace zerosum;
using zs_test::grp;
using zs_test::seq;

namespace {

std::vector<std::string> values(const CountVector& c) {
  std::vector<std::string> out;
  for (const BigInt& v : c.values()) out.push_back(v.str());
  return out;
}

Sequence random_sequence(std::mt19937_64& rng, const Group& g, std::size_t max_len) {
  Sequence s(g);
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) s.add(rng() % g.order());
  return s;
}

}  // namespace

TEST_CASE("count vectors of the documented examples") {
  const Group c3 = grp("C3");
  CHECK(values(count_all(seq(c3, "1^2 2"))) == std::vector<std::string>{"3", "3", "2"});
  CHECK(values(count_all(seq(c3, "empty"))) == std::vector<std::string>{"1", "0", "0"});
  CHECK(values(count_all(seq(grp("C2"), "1^4"))) == std::vector<std::string>{"8", "8"});
  CHECK(count_brute(seq(c3, "1^3"), Element{{0}}) == 2);
  CHECK(count_brute(seq(c3, "1^2"), Element{{1}}) == 2);
}

TEST_CASE("count_all agrees with brute force and the raw-coordinate oracle") {
  for (const char* spec : {"C3", "C4"}) {
    const Group g = grp(spec);
    for (std::size_t len = 0; len <= 6; ++len) {
      for (const Sequence& s : iterate_multisets(g, len, false)) {
        const CountVector c = count_all(s);
        const auto raw = zs_test::terms_of(s);
        for (std::size_t i = 0; i < g.order(); ++i) {
          const Element e = g.element_at(i);
          CHECK(c[i] == count_brute(s, e));
          CHECK(c[i] == oracle::count(g.invariants(), raw, e.coords));
        }
      }
    }
  }
  std::mt19937_64 rng(7);
  for (const Group& g : zs_test::groups_up_to(8)) {
    for (int trial = 0; trial < 20; ++trial) {
      const Sequence s = random_sequence(rng, g, 12);
      const CountVector c = count_all(s);
      for (std::size_t i = 0; i < g.order(); ++i) {
        CHECK(c[i] == count_brute(s, g.element_at(i)));
      }
    }
  }
}

TEST_CASE("count vector laws") {
  std::mt19937_64 rng(11);
  for (const Group& g : zs_test::groups_up_to(12)) {
    for (int trial = 0; trial < 15; ++trial) {
      const Sequence s = random_sequence(rng, g, 14);
      const CountVector c = count_all(s);
      CHECK(c.total() == pow2(static_cast<std::int64_t>(s.length())));
      CHECK(c[0] >= 1);
      const auto sigma = subsums(s);
      for (std::size_t i = 0; i < g.order(); ++i) {
        const bool reachable = std::binary_search(sigma.begin(), sigma.end(), i);
        CHECK((c[i] > 0) == reachable);
      }
      Sequence padded = s;
      padded.add(0);
      const CountVector p = count_all(padded);
      const std::size_t a = rng() % g.order();
      Sequence appended = s;
      appended.add(a);
      const CountVector q = count_all(appended);
      for (std::size_t i = 0; i < g.order(); ++i) {
        CHECK(p[i] == 2 * c[i]);
        CHECK(q[i] == c[i] + c[g.sub(i, a)]);
      }
    }
  }
}

TEST_CASE("large sequences use exact big integers") {
  Sequence s(grp("C2"));
  s.add(1, 130);
  const CountVector c = count_all(s);
  CHECK(c[0] == pow2(129));
  CHECK(c[1] == pow2(129));
  CHECK(c.total() == pow2(130));
  CHECK_THROWS_AS(count_brute(s, Element{{0}}), CapExceeded);
  CHECK_THROWS_AS(pow2(-1), InvalidArgument);
}

TEST_CASE("subsums") {
  CHECK(subsums(seq(grp("C5"), "empty")) == std::vector<std::size_t>{0});
  CHECK(subsums(seq(grp("C3"), "1^2")) == std::vector<std::size_t>{0, 1, 2});
  const Group g = grp("C2xC2");
  CHECK(subsums(seq(g, "(1,0)")) == std::vector<std::size_t>{0, g.index_of(Element{{1, 0}})});
}

TEST_CASE("extremal sets") {
  const Group c3 = grp("C3");
  CHECK(extremal_set(seq(c3, "1^3"), 3).members == std::vector<std::size_t>{0});
  CHECK(extremal_set(seq(c3, "1^2"), 3).members == std::vector<std::size_t>{0, 2});
  const ExtremalSet e = extremal_set(seq(grp("C2"), "1^4"), 2);
  CHECK(e.members == std::vector<std::size_t>{0, 1});
  CHECK(e.bound_exponent == 3);
  CHECK_THROWS_AS(extremal_set(seq(c3, "1"), 3), PreconditionError);
}

TEST_CASE("transformation identity") {
  const Group c3 = grp("C3");
  const Sequence s = seq(c3, "1^2 2");
  CHECK(transform(s, seq(c3, "2")) == seq(c3, "2^3"));
  CHECK(transform(s, seq(c3, "empty")) == seq_neg(s));
  CHECK(transform(s, s) == s);
  CHECK(check_transform(s, seq(c3, "2")).passed());
  CHECK(check_transform(s, s).passed());
  CHECK_THROWS_AS(transform(s, seq(c3, "2^2")), PreconditionError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto groups = zs_test::groups_up_to(9);
    const Group& g = groups[rng() % groups.size()];
    const Sequence t0 = random_sequence(rng, g, 10);
    Sequence t(g);
    for (const std::size_t a : t0.terms()) {
      if (rng() & 1u) t.add(a);
    }
    const Sequence w = transform(t0, t);
    CHECK(w.length() == t0.length());
    const auto raw_s = zs_test::terms_of(t0);
    const auto raw_w = zs_test::terms_of(w);
    const auto target = seq_sum(t).coords;
    CHECK(oracle::count(g.invariants(), raw_s, target) ==
          oracle::count(g.invariants(), raw_w, oracle::Vec(g.rank(), 0)));
  }
}

TEST_CASE("lower bound and one-and-all checks") {
  const Group c3 = grp("C3");
  const VerificationReport lb = check_lower_bound(seq(c3, "1^2 2"), 3);
  CHECK(lb.passed());
  CHECK(lb.details["min_count_on_subsums"] == "2");
  CHECK(check_lower_bound(seq(c3, "1^2"), 3).passed());
  CHECK(check_one_and_all(seq(c3, "1^3"), 3).passed());
  CHECK(check_one_and_all(seq(grp("C2"), "1^4"), 2).passed());
  CHECK(check_one_and_all(seq(c3, "1"), 3).passed());
  // A wrong D makes the bound false, which the check must notice.
  CHECK(check_lower_bound(seq(c3, "1^3"), 1).failed());
}

TEST_CASE("pushforward to quotients") {
  const Group g = grp("C2xC2");
  const Element gens[] = {Element{{1, 1}}};
  const Subgroup h = subgroup_closure(g, gens);
  const VerificationReport r = pushforward_counts(seq(g, "(1,0) (0,1)"), h);
  CHECK(r.passed());
  CHECK(r.details["sum_over_H"] == "2");
  std::mt19937_64 rng(5);
  for (const Group& gg : zs_test::groups_up_to(12)) {
    for (const Subgroup& hh : all_subgroups(gg)) {
      CHECK(pushforward_counts(random_sequence(rng, gg, 9), hh).passed());
    }
  }
}

TEST_CASE("count observer sees every count") {
  std::size_t seen = 0;
  CountObserver previous = set_count_observer([&](const CountVector&) { ++seen; });
  count_all(seq(grp("C3"), "1 2"));
  check_transform(seq(grp("C3"), "1 2"), seq(grp("C3"), "1"));
  set_count_observer(previous);
  CHECK(seen == 3);
}
