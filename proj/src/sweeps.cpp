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

#include "zerosum/core/sweeps.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <utility>

#include "zerosum/core/counting.hpp"
#include "zerosum/core/error.hpp"
#include "zerosum/core/structure.hpp"

namespace zerosum {
namespace {

std::int64_t resolve_max_len(const SweepOptions& opts, std::int64_t davenport) {
  return opts.max_len < 0 ? davenport + 3 : opts.max_len;
}

// Visits every sequence with lo <= |S| <= hi in canonical order. Returns
// false when the budget stopped the walk.
bool for_each_sequence(const Group& g, std::int64_t lo, std::int64_t hi,
                       bool exclude_zero, std::uint64_t budget,
                       std::uint64_t& counted,
                       const std::function<void(const Sequence&)>& visit) {
  for (std::int64_t len = std::max<std::int64_t>(lo, 0); len <= hi; ++len) {
    MultisetStream stream(g, static_cast<std::size_t>(len), exclude_zero);
    while (stream.next()) {
      if (counted >= budget) return false;
      ++counted;
      visit(stream.current());
    }
  }
  return true;
}

// Calls visit on every T | S, the empty one first.
template <typename Visit>
void for_each_divisor(const Sequence& s, Visit visit) {
  const std::vector<std::size_t> support = s.support();
  std::vector<std::uint64_t> digits(support.size(), 0);
  while (true) {
    Sequence t(s.group());
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (digits[i] > 0) t.add(support[i], digits[i]);
    }
    visit(t);
    std::size_t i = 0;
    while (i < support.size() && digits[i] == s.multiplicity(support[i])) {
      digits[i++] = 0;
    }
    if (i == support.size()) return;
    ++digits[i];
  }
}

class Tally {
 public:
  Tally(std::string check, std::size_t limit)
      : check_(std::move(check)), limit_(limit) {}

  void add(const VerificationReport& r, const std::string& subject) {
    ++checked_;
    switch (r.verdict) {
      case Verdict::pass:
        ++passed_;
        break;
      case Verdict::skipped:
        ++skipped_;
        break;
      case Verdict::fail:
      case Verdict::partial:
        ++failed_;
        if (witnesses_.size() < limit_) {
          witnesses_.push_back(subject + ": " + r.message);
        }
        break;
    }
  }

  VerificationReport finish(bool exhaustive, const std::string& scope) const {
    VerificationReport r;
    r.check = check_;
    r.details["scope"] = scope;
    r.details["checked"] = checked_;
    r.details["passed"] = passed_;
    r.details["skipped"] = skipped_;
    r.details["failed"] = failed_;
    r.details["exhaustive"] = exhaustive;
    r.witnesses = witnesses_;
    const std::string counts = std::to_string(passed_) + " passed, " +
                               std::to_string(skipped_) + " outside hypotheses";
    if (failed_ > 0) {
      r.verdict = Verdict::fail;
      r.message = std::to_string(failed_) + " failing cases over " + scope;
    } else if (!exhaustive) {
      r.verdict = Verdict::partial;
      r.message = "budget exhausted over " + scope + "; " + counts;
    } else {
      r.message = counts + " over " + scope;
    }
    return r;
  }

  std::uint64_t passed() const { return passed_; }

 private:
  std::string check_;
  std::size_t limit_;
  std::uint64_t checked_ = 0;
  std::uint64_t passed_ = 0;
  std::uint64_t skipped_ = 0;
  std::uint64_t failed_ = 0;
  std::vector<std::string> witnesses_;
};

std::string scope_text(const Group& g, std::int64_t lo, std::int64_t hi,
                       bool exclude_zero) {
  return std::string(exclude_zero ? "0-free " : "") + "sequences over " +
         format_group(g) + " of length " + std::to_string(std::max<std::int64_t>(lo, 0)) +
         ".." + std::to_string(hi);
}

bool contains_nontrivial(const ExtremalSet& e, const std::vector<Subgroup>& subgroups) {
  return std::any_of(subgroups.begin(), subgroups.end(), [&](const Subgroup& h) {
    return h.order() > 1 &&
           std::all_of(h.members.begin(), h.members.end(),
                       [&](std::size_t x) { return e.contains(x); });
  });
}

}  // namespace

VerificationReport sweep_lower_bound(const Group& g, const DavenportOracle& oracle,
                                     const SweepOptions& opts) {
  const std::int64_t d = oracle.value(g);
  const std::int64_t hi = resolve_max_len(opts, d);
  Tally tally("lower-bound", opts.witness_limit);
  std::uint64_t counted = 0;
  const bool done = for_each_sequence(g, 0, hi, true, opts.budget, counted,
                                      [&](const Sequence& s) {
                                        tally.add(check_lower_bound(s, d),
                                                  format_sequence(s));
                                      });
  return tally.finish(done, scope_text(g, 0, hi, true));
}

VerificationReport sweep_one_and_all(const Group& g, const DavenportOracle& oracle,
                                     const SweepOptions& opts) {
  const std::int64_t d = oracle.value(g);
  const std::int64_t hi = resolve_max_len(opts, d);
  Tally tally("one-and-all", opts.witness_limit);
  std::uint64_t counted = 0;
  const bool done = for_each_sequence(g, d - 1, hi, true, opts.budget, counted,
                                      [&](const Sequence& s) {
                                        tally.add(check_one_and_all(s, d),
                                                  format_sequence(s));
                                      });
  return tally.finish(done, scope_text(g, d - 1, hi, true));
}

VerificationReport sweep_transform(const Group& g, const SweepOptions& opts) {
  const std::int64_t hi = opts.max_len < 0 ? 6 : opts.max_len;
  Tally tally("transform", opts.witness_limit);
  std::uint64_t counted = 0;
  bool done = true;
  for (std::int64_t len = 0; len <= hi && done; ++len) {
    MultisetStream stream(g, static_cast<std::size_t>(len), false);
    while (done && stream.next()) {
      const Sequence s = stream.current();
      for_each_divisor(s, [&](const Sequence& t) {
        if (counted >= opts.budget) {
          done = false;
          return;
        }
        ++counted;
        tally.add(check_transform(s, t),
                  "S = " + format_sequence(s) + ", T = " + format_sequence(t));
      });
    }
  }
  VerificationReport r =
      tally.finish(done, "all T | S for " + scope_text(g, 0, hi, false));
  r.details["pairs"] = counted;
  return r;
}

VerificationReport sweep_transform_random(const Group& g, std::int64_t max_len,
                                          std::uint64_t trials,
                                          std::uint64_t seed) {
  if (max_len < 0) throw InvalidArgument("max_len must be nonnegative");
  Tally tally("transform", 20);
  std::mt19937_64 rng(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const auto len = static_cast<std::size_t>(
        uniform_below(rng, static_cast<std::uint64_t>(max_len) + 1));
    const Sequence s =
        Sequence::from_indices(g, sample_multiset(rng, g.order(), len));
    // Each occurrence joins T independently with probability 1/2.
    Sequence t(g);
    for (const std::size_t a : s.terms()) {
      if (rng() & 1u) t.add(a);
    }
    tally.add(check_transform(s, t),
              "S = " + format_sequence(s) + ", T = " + format_sequence(t));
  }
  VerificationReport r = tally.finish(
      true, std::to_string(trials) + " random pairs over " + format_group(g) +
                " with |S| <= " + std::to_string(max_len) + ", seed " +
                std::to_string(seed));
  r.details["seed"] = seed;
  return r;
}

VerificationReport sweep_es_chain(const Group& g, const DavenportOracle& oracle,
                                  const SweepOptions& opts) {
  const std::int64_t d = oracle.value(g);
  const std::int64_t hi = resolve_max_len(opts, d);
  Tally tally("es-chain", opts.witness_limit);
  std::uint64_t counted = 0;
  const bool done = for_each_sequence(
      g, d, hi, true, opts.budget, counted, [&](const Sequence& s) {
        for (const std::size_t a : s.support()) {
          tally.add(check_es_chain(s, g.element_at(a), d),
                    "S = " + format_sequence(s) + ", a = " + format_index(g, a));
        }
      });
  return tally.finish(done, "every term a of " + scope_text(g, d, hi, true));
}

VerificationReport sweep_subgroup_es(const Group& g, const DavenportOracle& oracle,
                                     const SweepOptions& opts) {
  const std::int64_t d = oracle.value(g);
  const std::int64_t hi = resolve_max_len(opts, d);
  Tally tally("subgroup-es", opts.witness_limit);
  const std::vector<Subgroup> subgroups = all_subgroups(g, opts.subgroup_cap);
  std::uint64_t counted = 0;
  std::uint64_t nontrivial = 0;
  const bool done = for_each_sequence(
      g, d - 1, hi, false, opts.budget, counted, [&](const Sequence& s) {
        const ExtremalSet e = extremal_set(s, d);
        if (!contains_nontrivial(e, subgroups)) return;
        ++nontrivial;
        tally.add(max_subgroups_in_extremal_set(e, d, oracle, opts.subgroup_cap).verdict,
                  format_sequence(s));
      });
  VerificationReport r = tally.finish(
      done, "sequences whose E(S) holds a nontrivial subgroup among " +
                scope_text(g, d - 1, hi, false));
  r.details["nontrivial_cases"] = nontrivial;
  r.details["sequences_counted"] = counted;
  return r;
}

VerificationReport sweep_odd_structure(const Group& g, const DavenportOracle& oracle,
                                       const SweepOptions& opts) {
  const std::int64_t d = oracle.value(g);
  const std::int64_t hi = resolve_max_len(opts, d);
  const ExtremalCatalog c = find_extremals(g, d, hi, opts.budget);
  if (g.order() % 2 == 0) {
    // Outside the theorem: record what happens without asserting anything.
    std::uint64_t decomposes = 0;
    for (const CatalogEntry& e : c.entries) {
      if (minimal_zero_sum_report(e.sequence, d).disjoint_decomposition()) ++decomposes;
    }
    VerificationReport r;
    r.check = "odd-structure";
    r.verdict = Verdict::skipped;
    r.message = "|G| is even; behavior recorded only";
    r.details["extremal_sequences"] = c.entries.size();
    r.details["disjoint_decompositions"] = decomposes;
    r.details["exhaustive"] = c.exhaustive;
    return r;
  }
  Tally tally("odd-structure", opts.witness_limit);
  for (const CatalogEntry& e : c.entries) {
    tally.add(check_odd_group_structure(e.sequence, d), format_sequence(e.sequence));
  }
  VerificationReport r =
      tally.finish(c.exhaustive, "extremal " + scope_text(g, d - 1, hi, true));
  r.details["sequences_counted"] = c.sequences_counted;
  return r;
}

VerificationReport sweep_corollary(const Group& g, const DavenportOracle& oracle,
                                   const SweepOptions& opts) {
  const std::int64_t d = oracle.value(g);
  const std::int64_t hi = resolve_max_len(opts, d);
  const ExtremalCatalog c = find_extremals(g, d, hi, opts.budget);
  Tally tally("corollary", opts.witness_limit);
  for (const CatalogEntry& e : c.entries) {
    tally.add(check_corollary_decomposition(e.sequence, d),
              format_sequence(e.sequence));
  }
  VerificationReport r =
      tally.finish(c.exhaustive, "extremal " + scope_text(g, d - 1, hi, true));
  r.details["sequences_counted"] = c.sequences_counted;
  return r;
}

VerificationReport sweep_equivalences(const Group& g, const DavenportOracle& oracle,
                                      const SweepOptions& opts) {
  const ConditionProfile p = condition_profile(g, oracle);
  const std::int64_t d = p.davenport;
  const std::int64_t hi = resolve_max_len(opts, d);
  VerificationReport r;
  r.check = "equivalences";
  r.details["davenport"] = d;
  r.details["t"] = p.t;
  r.details["condition_iii"] = p.cond_iii;

  if (!p.cond_iii) {
    const Subgroup& h = *p.offending_h;
    const std::size_t hi_elem = h.members.back();
    const std::int64_t dq = oracle.value(quotient_group(g, h).group());
    r.details["offending_h"] = format_index(g, hi_elem);
    r.details["D(G/H)"] = dq;
    Json family = Json::array();
    for (std::int64_t k = 1; k <= opts.family_k; ++k) {
      const Sequence s = construct_unbounded_family(g, h, k, oracle);
      const ExtremalSet e = extremal_set(s, d);
      const bool holds_h = !s.contains_zero() && e.contains(0) && e.contains(hi_elem);
      Json item = Json::object();
      item["k"] = k;
      item["sequence"] = format_sequence(s);
      item["length"] = s.length();
      item["E_contains_H"] = holds_h;
      family.push_back(std::move(item));
      if (!holds_h) r.witnesses.push_back(format_sequence(s));
    }
    r.details["unbounded_family"] = std::move(family);
    if (r.witnesses.empty()) {
      r.message = "condition (iii) fails at H = {0, " + format_index(g, hi_elem) +
                  "}; extremal family S h^k exhibited for k = 1.." +
                  std::to_string(opts.family_k) + ", so (ii) and (iv) fail too";
    } else {
      r.verdict = Verdict::fail;
      r.message = "constructed family is not extremal at 0 and h";
    }
    return r;
  }

  const std::vector<Subgroup> subgroups = all_subgroups(g, opts.subgroup_cap);
  std::uint64_t counted = 0;
  std::uint64_t extremal = 0;
  std::uint64_t decomposes = 0;
  std::int64_t ceiling = -1;
  std::vector<std::string> cond_i_counterexamples;
  const bool done = for_each_sequence(
      g, d - 1, hi, true, opts.budget, counted, [&](const Sequence& s) {
        const CountVector counts = count_all(s);
        const ExtremalSet e = extremal_set(counts, d);
        if (contains_nontrivial(e, subgroups)) {
          r.witnesses.push_back("(iv) fails for " + format_sequence(s));
        }
        if (!e.contains(0)) return;
        ++extremal;
        ceiling = std::max(ceiling, static_cast<std::int64_t>(s.length()));
        if (minimal_zero_sum_report(s, d).disjoint_decomposition()) {
          ++decomposes;
        } else if (cond_i_counterexamples.size() < opts.witness_limit) {
          cond_i_counterexamples.push_back(format_sequence(s));
        }
      });
  if (ceiling > p.t) r.witnesses.push_back("extremal length exceeds t");
  const std::string scope = scope_text(g, d - 1, hi, true);
  r.details["scope"] = scope;
  r.details["sequences_counted"] = counted;
  r.details["exhaustive"] = done;
  r.details["extremal_sequences"] = extremal;
  r.details["empirical_ceiling"] = ceiling;
  r.details["ceiling_below_cap"] = ceiling < hi;
  r.details["condition_i_holds"] = decomposes;
  r.details["condition_i_counterexamples"] = cond_i_counterexamples;
  if (!r.witnesses.empty()) {
    r.verdict = Verdict::fail;
    r.message = "condition (iii) holds but " + r.witnesses.front();
  } else if (!done) {
    r.verdict = Verdict::partial;
    r.message = "condition (iii) holds; budget exhausted over " + scope;
  } else {
    r.message = "condition (iii) holds; (ii) and (iv): no counterexample up to cap " +
                std::to_string(hi) + ", extremal lengths stop at " +
                std::to_string(ceiling) + " <= t = " + std::to_string(p.t);
  }
  return r;
}

}  // namespace zerosum
