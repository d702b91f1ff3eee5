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

#include "zerosum/core/search.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "zerosum/core/error.hpp"

namespace zerosum {
namespace {

std::string index_set(const Group& g, const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_index(g, xs[i]);
  }
  return out + "}";
}

std::string cap_phrase(std::int64_t cap) {
  return "no counterexample up to cap " + std::to_string(cap);
}

bool is_extremal_zero(const CountVector& counts, std::int64_t davenport) {
  const std::int64_t e =
      static_cast<std::int64_t>(counts.source_length()) - davenport + 1;
  return e >= 0 && counts[0] == pow2(e);
}

// Walks every 0-free sequence with lengths in [lo, hi], counting each one.
// Returns false when the budget ran out.
template <typename Visit>
bool scan_zero_free(const Group& g, std::int64_t lo, std::int64_t hi,
                    std::uint64_t budget, std::uint64_t& counted, Visit visit) {
  for (std::int64_t len = std::max<std::int64_t>(lo, 0); len <= hi; ++len) {
    MultisetStream stream(g, static_cast<std::size_t>(len), true);
    while (stream.next()) {
      if (counted >= budget) return false;
      ++counted;
      const Sequence s = stream.current();
      visit(s, count_all(s));
    }
  }
  return true;
}

}  // namespace

ExtremalCatalog find_extremals(const Group& g, std::int64_t davenport,
                               std::int64_t length_cap, std::uint64_t budget) {
  ExtremalCatalog c;
  c.group = g;
  c.davenport = davenport;
  c.length_cap = length_cap;
  c.exhaustive = scan_zero_free(
      g, davenport - 1, length_cap, budget, c.sequences_counted,
      [&](const Sequence& s, const CountVector& counts) {
        if (!is_extremal_zero(counts, davenport)) return;
        c.entries.push_back({s, extremal_set(counts, davenport)});
        c.max_length_found = static_cast<std::int64_t>(s.length());
      });
  return c;
}

Sequence construct_extremal(const Group& g, std::size_t target, std::int64_t m,
                            std::int64_t davenport, std::size_t cap) {
  if (target >= g.order()) throw InvalidArgument("element index out of range");
  if (m < davenport - 1) {
    throw PreconditionError("m = " + std::to_string(m) + " is below D(G) - 1 = " +
                            std::to_string(davenport - 1));
  }
  std::optional<Sequence> u_found;
  std::optional<Sequence> t_found;
  for_each_zero_sum_free(
      g, static_cast<std::size_t>(davenport - 1),
      [&](const Sequence& u) {
        // Smallest T | U in canonical order with sigma(T) = target.
        const std::vector<std::size_t> support = u.support();
        std::vector<std::uint64_t> digits(support.size(), 0);
        std::optional<Sequence> best;
        while (true) {
          Sequence t(g);
          for (std::size_t i = 0; i < support.size(); ++i) {
            if (digits[i] > 0) t.add(support[i], digits[i]);
          }
          if (seq_sum_index(t) == target && (!best || canonical_less(t, *best))) {
            best = std::move(t);
          }
          std::size_t i = 0;
          while (i < support.size() && digits[i] == u.multiplicity(support[i])) {
            digits[i++] = 0;
          }
          if (i == support.size()) break;
          ++digits[i];
        }
        if (!best) return true;
        u_found = u;
        t_found = std::move(best);
        return false;
      },
      cap);
  if (!u_found) {
    throw PreconditionError("no zero-sum-free U of length D(G) - 1 has " +
                            format_index(g, target) + " as a subsum");
  }
  Sequence s = seq_mul(*t_found, seq_neg(seq_div(*u_found, *t_found)));
  const std::int64_t zeros = m - davenport + 1;
  s.add(0, static_cast<std::uint64_t>(zeros));
  if (count_all(s)[target] != pow2(zeros)) {
    throw InternalError("constructed " + format_sequence(s) +
                        " misses the extremal count");
  }
  return s;
}

VerificationReport check_subsum_coverage(const Group& g, std::int64_t davenport,
                                         std::size_t cap) {
  VerificationReport r;
  r.check = "subsum-coverage";
  std::uint64_t visited = 0;
  for_each_zero_sum_free(
      g, static_cast<std::size_t>(std::max<std::int64_t>(davenport - 1, 0)),
      [&](const Sequence& u) {
        ++visited;
        if (subsums(u).size() != g.order()) r.witnesses.push_back(format_sequence(u));
        return true;
      },
      cap);
  r.details["maximal_zero_sum_free"] = visited;
  if (r.witnesses.empty()) {
    r.message = "every zero-sum-free sequence of length D(G) - 1 reaches all of G";
  } else {
    r.verdict = Verdict::fail;
    r.message = "some zero-sum-free sequence of length D(G) - 1 misses an element";
  }
  return r;
}

VerificationReport conjecture1_harness(const Group& g,
                                       const DavenportOracle& oracle,
                                       std::int64_t length_cap,
                                       std::uint64_t budget) {
  VerificationReport r;
  r.check = "conjecture-1";
  const ConditionProfile profile = condition_profile(g, oracle);
  r.details["davenport"] = profile.davenport;
  r.details["length_cap"] = length_cap;
  r.details["qualifies"] = profile.cond_iii;
  if (!profile.cond_iii) {
    r.verdict = Verdict::skipped;
    r.details["offending_subgroup"] = index_set(g, profile.offending_h->members);
    r.message = "group does not qualify: D(G) < D(G/H) + 2 for H = " +
                index_set(g, profile.offending_h->members);
    return r;
  }
  const ExtremalCatalog c = find_extremals(g, profile.davenport, length_cap, budget);
  std::uint64_t checked = 0;
  for (const CatalogEntry& e : c.entries) {
    ++checked;
    if (!minimal_zero_sum_report(e.sequence, profile.davenport)
             .disjoint_decomposition()) {
      r.witnesses.push_back(format_sequence(e.sequence));
    }
  }
  r.details["extremal_sequences"] = checked;
  r.details["sequences_counted"] = c.sequences_counted;
  r.details["exhaustive"] = c.exhaustive;
  if (!r.witnesses.empty()) {
    r.verdict = Verdict::fail;
    r.message = "counterexample found: " + r.witnesses.front();
  } else if (!c.exhaustive) {
    r.verdict = Verdict::partial;
    r.message = cap_phrase(length_cap) + " (budget exhausted before the cap)";
  } else {
    r.message = cap_phrase(length_cap);
  }
  return r;
}

VerificationReport conjecture2_harness(const Group& g,
                                       const DavenportOracle& oracle,
                                       std::int64_t length_cap,
                                       std::uint64_t budget,
                                       std::size_t subgroup_cap) {
  const std::int64_t davenport = oracle.value(g);
  const std::int64_t ds = d_star(g);
  const std::int64_t rank = static_cast<std::int64_t>(g.rank());
  const std::int64_t bound = ds + rank;
  if (davenport != ds + 1) {
    throw PreconditionError("hypothesis fails: D(G) = " + std::to_string(davenport) +
                            " but d*(G) + 1 = " + std::to_string(ds + 1));
  }
  if (length_cap < bound + 1) {
    throw PreconditionError("length cap must be at least d*(G) + rank + 1 = " +
                            std::to_string(bound + 1));
  }
  std::vector<Subgroup> nontrivial;
  for (Subgroup& h : all_subgroups(g, subgroup_cap)) {
    if (h.order() > 1) nontrivial.push_back(std::move(h));
  }
  auto subgroup_free = [&](const ExtremalSet& e) {
    return std::none_of(nontrivial.begin(), nontrivial.end(), [&](const Subgroup& h) {
      return std::all_of(h.members.begin(), h.members.end(),
                         [&](std::size_t x) { return e.contains(x); });
    });
  };

  VerificationReport r;
  r.check = "conjecture-2";
  std::int64_t longest = -1;
  Json per_length = Json::object();
  std::uint64_t counted = 0;
  const bool exhaustive = scan_zero_free(
      g, davenport - 1, length_cap, budget, counted,
      [&](const Sequence& s, const CountVector& counts) {
        const ExtremalSet e = extremal_set(counts, davenport);
        if (e.empty() || !subgroup_free(e)) return;
        const auto len = static_cast<std::int64_t>(s.length());
        const std::string key = std::to_string(len);
        per_length[key] = per_length.value(key, 0) + 1;
        longest = std::max(longest, len);
        if (len > bound) r.witnesses.push_back(format_sequence(s));
      });

  Sequence witness(g);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    Element e = g.zero();
    e.coords[i] = 1;
    witness.add(g.index_of(e), static_cast<std::uint64_t>(g.invariants()[i]));
  }
  const CountVector wc = count_all(witness);
  const bool witness_extremal = !witness.contains_zero() && is_extremal_zero(wc, davenport);
  const bool witness_qualifies = subgroup_free(extremal_set(wc, davenport));

  r.details["davenport"] = davenport;
  r.details["bound"] = bound;
  r.details["length_cap"] = length_cap;
  r.details["max_length"] = longest;
  r.details["qualifying_by_length"] = per_length;
  r.details["witness"] = format_sequence(witness);
  r.details["witness_extremal"] = witness_extremal;
  r.details["witness_qualifies"] = witness_qualifies;
  r.details["bound_attained"] = longest == bound;
  r.details["sequences_counted"] = counted;
  r.details["exhaustive"] = exhaustive;
  if (!r.witnesses.empty()) {
    r.verdict = Verdict::fail;
    r.message = "counterexample found: " + r.witnesses.front();
  } else if (!exhaustive) {
    r.verdict = Verdict::partial;
    r.message = cap_phrase(length_cap) + " (budget exhausted before the cap)";
  } else {
    r.message = cap_phrase(length_cap) + "; " +
                (longest < 0 ? std::string("no qualifying sequence")
                             : "longest qualifying length " + std::to_string(longest)) +
                ", bound " + std::to_string(bound);
  }
  return r;
}

ExtremalCatalog random_search(const Group& g, std::int64_t davenport,
                              std::int64_t length, std::uint64_t trials,
                              std::uint64_t seed) {
  if (length < 0) throw InvalidArgument("length must be nonnegative");
  ExtremalCatalog c;
  c.group = g;
  c.davenport = davenport;
  c.length_cap = length;
  c.exhaustive = false;
  const std::uint64_t nonzero = g.order() - 1;
  if (nonzero == 0 && length > 0) return c;
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::size_t>> seen;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::vector<std::size_t> terms =
        sample_multiset(rng, nonzero, static_cast<std::size_t>(length));
    for (std::size_t& t : terms) ++t;
    ++c.sequences_counted;
    const Sequence s = Sequence::from_indices(g, terms);
    const CountVector counts = count_all(s);
    if (is_extremal_zero(counts, davenport) && seen.insert(terms).second) {
      c.entries.push_back({s, extremal_set(counts, davenport)});
    }
  }
  std::sort(c.entries.begin(), c.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              return canonical_less(a.sequence, b.sequence);
            });
  if (!c.entries.empty()) {
    c.max_length_found = static_cast<std::int64_t>(c.entries.back().sequence.length());
  }
  return c;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty sampling range");
  const std::uint64_t limit =
      std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::size_t> sample_multiset(std::mt19937_64& rng,
                                         std::size_t symbols, std::size_t length) {
  if (length == 0) return {};
  if (symbols == 0) throw InvalidArgument("no symbols to sample from");
  // Floyd's algorithm picks a length-subset of [0, symbols + length - 1);
  // subtracting positions maps it onto a multiset (stars and bars).
  const std::uint64_t pool = symbols + length - 1;
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = pool - length; j < pool; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    chosen.insert(chosen.contains(t) ? j : t);
  }
  std::vector<std::size_t> out;
  out.reserve(length);
  std::size_t pos = 0;
  for (const std::uint64_t x : chosen) out.push_back(static_cast<std::size_t>(x) - pos++);
  return out;
}

Json catalog_json(const ExtremalCatalog& c) {
  Json j = Json::object();
  j["davenport"] = c.davenport;
  j["length_cap"] = c.length_cap;
  j["exhaustive"] = c.exhaustive;
  j["sequences_counted"] = c.sequences_counted;
  j["max_length_found"] = c.max_length_found;
  Json entries = Json::array();
  for (const CatalogEntry& e : c.entries) {
    Json item = Json::object();
    item["sequence"] = format_sequence(e.sequence);
    item["length"] = e.sequence.length();
    item["E"] = index_set(c.group, e.extremal.members);
    entries.push_back(std::move(item));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace zerosum
