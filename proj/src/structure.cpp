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

#include "zerosum/core/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "zerosum/core/error.hpp"

namespace zerosum {
namespace {

// Zero-sum freeness by growing the subsum set one occurrence at a time: a
// new term a closes a zero sum iff -a is already a subsum.
bool zero_sum_free_by_subsums(const Group& g,
                              std::span<const std::size_t> support,
                              std::span<const std::uint64_t> mult,
                              std::vector<char>& reach,
                              std::vector<std::size_t>& members) {
  std::fill(reach.begin(), reach.end(), 0);
  members.assign(1, 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const std::size_t a = support[i];
    const std::size_t minus_a = g.neg(a);
    for (std::uint64_t k = 0; k < mult[i]; ++k) {
      if (reach[minus_a]) return false;
      const std::size_t before = members.size();
      for (std::size_t j = 0; j < before; ++j) {
        const std::size_t y = g.add(members[j], a);
        if (!reach[y]) {
          reach[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return true;
}

bool is_minimal_fast(const Group& g, std::span<const std::size_t> support,
                     std::vector<std::uint64_t> mult, std::vector<char>& reach,
                     std::vector<std::size_t>& members) {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (mult[i] == 0) continue;
    --mult[i];
    const bool free = zero_sum_free_by_subsums(g, support, mult, reach, members);
    ++mult[i];
    if (!free) return false;
  }
  return true;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

VerificationReport skipped(std::string check, std::string reason) {
  VerificationReport r;
  r.check = std::move(check);
  r.verdict = Verdict::skipped;
  r.message = "precondition not met: " + std::move(reason);
  return r;
}

Json minimals_json(const MinZeroSumReport& m) {
  Json list = Json::array();
  for (const Sequence& t : m.minimals) list.push_back(format_sequence(t));
  return list;
}

void describe(VerificationReport& r, const MinZeroSumReport& m) {
  r.details["sequence"] = format_sequence(m.sequence);
  r.details["minimal_zero_sums"] = minimals_json(m);
  r.details["index_level_count"] = m.index_level_count.str();
  r.details["expected_count"] = m.expected_count;
  r.details["pairwise_disjoint"] = m.pairwise_disjoint;
}

std::string join_elements(const Group& g, const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_index(g, xs[i]);
  }
  return out + "}";
}

}  // namespace

bool is_minimal_zero_sum(const Sequence& t) {
  if (t.empty() || seq_sum_index(t) != 0) return false;
  for (const std::size_t a : t.support()) {
    if (!is_zero_sum_free(remove_term(t, a))) return false;
  }
  return true;
}

std::vector<Sequence> minimal_zero_sums(const Sequence& s) {
  if (s.length() > kMinimalZeroSumCap) {
    throw CapExceeded("minimal zero-sum enumeration is capped at length " +
                      std::to_string(kMinimalZeroSumCap));
  }
  const Group& g = s.group();
  const std::vector<std::size_t> support = s.support();
  const std::size_t k = support.size();
  std::vector<std::uint64_t> limit(k);
  std::vector<std::size_t> reset_shift(k);
  for (std::size_t i = 0; i < k; ++i) {
    limit[i] = s.multiplicity(support[i]);
    reset_shift[i] = g.neg(g.scale(static_cast<std::int64_t>(limit[i]), support[i]));
  }
  std::vector<std::uint64_t> digits(k, 0);
  std::vector<char> reach(g.order());
  std::vector<std::size_t> members;
  std::vector<Sequence> out;
  std::size_t sum = 0;
  // Odometer over all sub-multisets, tracking the running sum.
  while (true) {
    std::size_t i = 0;
    while (i < k && digits[i] == limit[i]) {
      digits[i] = 0;
      sum = g.add(sum, reset_shift[i]);
      ++i;
    }
    if (i == k) break;
    ++digits[i];
    sum = g.add(sum, support[i]);
    if (sum != 0) continue;
    if (is_minimal_fast(g, support, digits, reach, members)) {
      Sequence t(g);
      for (std::size_t j = 0; j < k; ++j) {
        if (digits[j] > 0) t.add(support[j], digits[j]);
      }
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

BigInt occurrences(const Sequence& t, const Sequence& s) {
  BigInt total = 1;
  for (const std::size_t a : t.support()) {
    total *= binomial(s.multiplicity(a), t.multiplicity(a));
  }
  return total;
}

bool MinZeroSumReport::disjoint_decomposition() const {
  return expected_count >= 0 &&
         minimals.size() == static_cast<std::size_t>(expected_count) &&
         index_level_count == expected_count && pairwise_disjoint;
}

MinZeroSumReport minimal_zero_sum_report(const Sequence& s,
                                         std::int64_t davenport) {
  MinZeroSumReport m{s, minimal_zero_sums(s), true, 0,
                     static_cast<std::int64_t>(s.length()) - davenport + 1};
  for (const Sequence& t : m.minimals) m.index_level_count += occurrences(t, s);
  for (std::size_t i = 0; i < m.minimals.size() && m.pairwise_disjoint; ++i) {
    for (std::size_t j = i + 1; j < m.minimals.size(); ++j) {
      if (!seq_gcd(m.minimals[i], m.minimals[j]).empty()) {
        m.pairwise_disjoint = false;
        break;
      }
    }
  }
  return m;
}

VerificationReport check_odd_group_structure(const Sequence& s,
                                             std::int64_t davenport) {
  const std::string check = "odd-structure";
  const Group& g = s.group();
  if (g.order() % 2 == 0) return skipped(check, "|G| is even");
  if (s.contains_zero()) return skipped(check, "0 divides S");
  const std::int64_t exponent =
      static_cast<std::int64_t>(s.length()) - davenport + 1;
  if (exponent < 0) return skipped(check, "|S| < D(G) - 1");
  const CountVector counts = count_all(s);
  if (counts[0] != pow2(exponent)) {
    return skipped(check, "N_0(S) = " + counts[0].str() + " is not 2^" +
                              std::to_string(exponent));
  }
  VerificationReport r;
  r.check = check;
  const MinZeroSumReport m = minimal_zero_sum_report(s, davenport);
  describe(r, m);
  if (m.disjoint_decomposition()) {
    r.message = std::to_string(m.expected_count) +
                " pairwise disjoint minimal zero-sum subsequences";
  } else {
    r.verdict = Verdict::fail;
    r.message = "expected " + std::to_string(m.expected_count) +
                " pairwise disjoint minimal zero-sum subsequences, found " +
                m.index_level_count.str() +
                (m.pairwise_disjoint ? "" : " (overlapping)");
    r.witnesses.push_back(format_sequence(s));
  }
  return r;
}

VerificationReport check_corollary_decomposition(const Sequence& s,
                                                 std::int64_t davenport) {
  const std::string check = "corollary";
  const Group& g = s.group();
  if (g.order() % 2 == 0) return skipped(check, "|G| is even");
  if (s.contains_zero()) return skipped(check, "0 divides S");
  if (static_cast<std::int64_t>(s.length()) < davenport - 1) {
    return skipped(check, "|S| < D(G) - 1");
  }
  const ExtremalSet e = extremal_set(s, davenport);
  if (e.members != std::vector<std::size_t>{0}) {
    return skipped(check, "E(S) = " + join_elements(g, e.members) + " is not {0}");
  }
  VerificationReport r;
  r.check = check;
  const MinZeroSumReport m = minimal_zero_sum_report(s, davenport);
  describe(r, m);
  Sequence product(g);
  for (const Sequence& t : m.minimals) product = seq_mul(product, t);
  const bool exact = product == s;
  r.details["product_equals_S"] = exact;
  if (exact && m.disjoint_decomposition()) {
    r.message = "S is the product of its " + std::to_string(m.minimals.size()) +
                " minimal zero-sum subsequences";
  } else {
    r.verdict = Verdict::fail;
    r.message = exact ? "minimal zero-sum subsequences overlap"
                      : "S is not the product of its minimal zero-sum subsequences";
    r.witnesses.push_back(format_sequence(s));
  }
  return r;
}

VerificationReport check_es_chain(const Sequence& s, const Element& a,
                                  std::int64_t davenport) {
  const std::string check = "es-chain";
  const Group& g = s.group();
  const std::size_t ai = g.index_of(a);
  if (s.contains_zero()) return skipped(check, "0 divides S");
  if (static_cast<std::int64_t>(s.length()) < davenport) {
    return skipped(check, "|S| < D(G)");
  }
  const ExtremalSet es = extremal_set(s, davenport);
  if (!es.contains(0)) return skipped(check, "0 is not in E(S)");
  if (s.multiplicity(ai) == 0) {
    return skipped(check, format_element(g, a) + " is not a term of S");
  }
  const Sequence rest = remove_term(s, ai);
  const CountVector rest_counts = count_all(rest);
  // a lies in a nonempty zero-sum subsequence iff -a is a subsum of S a^{-1}.
  if (rest_counts[g.neg(ai)] == 0) {
    return skipped(check, format_element(g, a) +
                              " is not a term of any nonempty zero-sum subsequence");
  }
  const ExtremalSet reduced = extremal_set(rest_counts, davenport);
  VerificationReport r;
  r.check = check;
  r.details["sequence"] = format_sequence(s);
  r.details["a"] = format_element(g, a);
  r.details["E(S)"] = join_elements(g, es.members);
  r.details["E(S a^-1)"] = join_elements(g, reduced.members);
  for (const std::size_t h : es.members) {
    for (const std::size_t x : {h, g.sub(h, ai)}) {
      if (!reduced.contains(x)) r.witnesses.push_back(format_index(g, x));
    }
  }
  if (r.witnesses.empty()) {
    r.message = "E(S) + {0, -a} is contained in E(S a^-1)";
  } else {
    r.verdict = Verdict::fail;
    r.message = "E(S) + {0, -a} is not contained in E(S a^-1)";
  }
  return r;
}

ExtremalSubgroups max_subgroups_in_extremal_set(const ExtremalSet& e,
                                                std::int64_t davenport,
                                                const DavenportOracle& oracle,
                                                std::size_t cap) {
  const Group& g = e.group;
  ExtremalSubgroups out;
  for (Subgroup& h : all_subgroups(g, cap)) {
    const bool inside = std::all_of(h.members.begin(), h.members.end(),
                                    [&](std::size_t x) { return e.contains(x); });
    if (inside) out.contained.push_back(std::move(h));
  }
  out.maximal.assign(out.contained.size(), true);
  for (std::size_t i = 0; i < out.contained.size(); ++i) {
    for (std::size_t j = 0; j < out.contained.size(); ++j) {
      if (i == j || out.contained[j].order() <= out.contained[i].order()) continue;
      const auto& small = out.contained[i].members;
      const auto& big = out.contained[j].members;
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        out.maximal[i] = false;
        break;
      }
    }
  }
  VerificationReport& r = out.verdict;
  r.check = "subgroup-es";
  Json checked = Json::array();
  for (const Subgroup& h : out.contained) {
    if (h.order() == 1) continue;
    Json item = Json::object();
    item["members"] = join_elements(g, h.members);
    const bool exponent_two = std::all_of(
        h.members.begin(), h.members.end(),
        [&](std::size_t x) { return g.add(x, x) == 0; });
    std::int64_t rank = 0;
    for (std::size_t n = h.order(); n > 1; n /= 2) ++rank;
    const Quotient q = quotient_group(g, h);
    const std::int64_t dq = oracle.value(q.group());
    const bool equality = davenport == dq + rank;
    item["elementary_2_group"] = exponent_two;
    item["rank"] = rank;
    item["D(G/H)"] = dq;
    item["D(G) = D(G/H) + rank"] = equality;
    checked.push_back(item);
    if (!exponent_two || !equality) {
      r.witnesses.push_back(join_elements(g, h.members));
    }
  }
  r.details["extremal_set"] = join_elements(g, e.members);
  r.details["contained_subgroups"] = out.contained.size();
  r.details["nontrivial"] = checked;
  if (!r.witnesses.empty()) {
    r.verdict = Verdict::fail;
    r.message = "a subgroup inside E(S) is not of the form C2^r with D(G) = D(G/H) + r";
  } else if (checked.empty()) {
    r.message = "E(S) contains only the trivial subgroup";
  } else {
    r.message = "every nontrivial subgroup inside E(S) is C2^r with D(G) = D(G/H) + r";
  }
  return out;
}

ConditionProfile condition_profile(const Group& g, const DavenportOracle& oracle) {
  ConditionProfile p;
  p.group = g;
  p.davenport = oracle.value(g);
  p.t = t_bound(g, p.davenport);
  for (const Subgroup& h : order_two_subgroups(g)) {
    const std::int64_t dq = oracle.value(quotient_group(g, h).group());
    if (p.davenport < dq + 2) {
      p.cond_iii = false;
      p.offending_h = h;
      break;
    }
  }
  return p;
}

Sequence construct_unbounded_family(const Group& g, const Subgroup& h,
                                    std::int64_t k,
                                    const DavenportOracle& oracle) {
  if (k < 0) throw InvalidArgument("k must be nonnegative");
  if (h.order() != 2) throw PreconditionError("H must have order 2");
  const std::size_t hi = h.members.back();
  const Quotient q = quotient_group(g, h);
  const std::int64_t dg = oracle.value(g);
  const std::int64_t dq = oracle.value(q.group());
  if (dg != dq + 1) {
    throw PreconditionError("D(G) = " + std::to_string(dg) +
                            " but D(G/H) + 1 = " + std::to_string(dq + 1));
  }
  // A minimal zero-sum sequence of length D(G/H) over G/H: a maximal
  // zero-sum-free U followed by -sigma(U).
  const DavenportMethod method = davenport_formula(q.group())
                                     ? DavenportMethod::formula
                                     : DavenportMethod::exact;
  const DavenportResult dr = davenport(q.group(), method, oracle.cap());
  std::vector<std::size_t> image = dr.witness.terms();
  image.push_back(q.group().neg(seq_sum_index(dr.witness)));

  // Lift each term to its smallest preimage, then move the sum onto h.
  std::vector<std::size_t> lift(q.group().order(), g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t& slot = lift[q.project_index(x)];
    if (slot == g.order()) slot = x;
  }
  std::vector<std::size_t> terms;
  for (const std::size_t y : image) terms.push_back(lift[y]);
  std::size_t sum = 0;
  for (const std::size_t t : terms) sum = g.add(sum, t);
  if (sum == 0) {
    terms.front() = g.add(terms.front(), hi);
    sum = hi;
  }
  if (sum != hi) throw InternalError("lifted sequence does not sum into H");

  Sequence s = Sequence::from_indices(g, terms);
  s.add(hi, static_cast<std::uint64_t>(k));
  const CountVector counts = count_all(s);
  const std::int64_t exponent = static_cast<std::int64_t>(s.length()) - dg + 1;
  if (exponent < 0 || counts[0] != pow2(exponent) || counts[hi] != pow2(exponent)) {
    throw InternalError("constructed sequence " + format_sequence(s) +
                        " is not extremal at 0 and h");
  }
  return s;
}

VerificationReport check_cyclic_characterization(std::int64_t n,
                                                 std::int64_t max_len) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  const std::int64_t spec[] = {n};
  const Group g = make_group(spec);
  VerificationReport r;
  r.check = "cn";
  r.details["n"] = n;
  r.details["max_len"] = max_len;

  if (n == 2) {
    // Excluded from the theorem: every 0-free sequence over C2 is 1^k, and
    // N_0(1^k) = 2^{k-1}.
    for (std::int64_t len = 1; len <= max_len; ++len) {
      Sequence s(g);
      s.add(1, static_cast<std::uint64_t>(len));
      if (count_all(s)[0] != pow2(len - 1)) r.witnesses.push_back(format_sequence(s));
    }
    r.details["extremal_count"] = std::max<std::int64_t>(max_len, 0);
    if (r.witnesses.empty()) {
      r.message = "n = 2 lies outside the theorem; every 1^k up to the cap is extremal";
    } else {
      r.verdict = Verdict::fail;
      r.message = "some 1^k over C2 is not extremal";
    }
    return r;
  }
  if (max_len < n + 1) {
    throw PreconditionError("max_len must be at least n + 1");
  }

  std::set<std::vector<std::size_t>> expected;
  std::int64_t generators = 0;
  for (std::int64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    ++generators;
    const auto ai = static_cast<std::size_t>(a);
    expected.insert(std::vector<std::size_t>(static_cast<std::size_t>(n - 1), ai));
    expected.insert(std::vector<std::size_t>(static_cast<std::size_t>(n), ai));
  }
  std::set<std::vector<std::size_t>> found;
  std::int64_t longest = -1;
  for (std::int64_t len = n - 1; len <= max_len; ++len) {
    const BigInt target = pow2(len - n + 1);
    MultisetStream stream(g, static_cast<std::size_t>(len), true);
    while (stream.next()) {
      const Sequence s = stream.current();
      if (count_all(s)[0] == target) {
        found.insert(stream.terms());
        longest = len;
      }
    }
  }
  // N_0(a^{n+1}) >= 1 + C(n+1, n) > 4 for every generator a.
  bool inequality = true;
  for (std::int64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    Sequence s(g);
    s.add(static_cast<std::size_t>(a), static_cast<std::uint64_t>(n + 1));
    const BigInt n0 = count_all(s)[0];
    if (n0 < 1 + (n + 1) || n0 <= 4) inequality = false;
  }
  r.details["extremal_count"] = found.size();
  r.details["expected_count"] = 2 * generators;
  r.details["max_extremal_length"] = longest;
  r.details["generator_power_inequality"] = inequality;
  for (const auto& terms : found) {
    if (!expected.contains(terms)) {
      r.witnesses.push_back("unexpected " +
                            format_sequence(Sequence::from_indices(g, terms)));
    }
  }
  for (const auto& terms : expected) {
    if (!found.contains(terms)) {
      r.witnesses.push_back("missing " +
                            format_sequence(Sequence::from_indices(g, terms)));
    }
  }
  if (r.witnesses.empty() && inequality) {
    r.message = "extremal sequences up to length " + std::to_string(max_len) +
                " are exactly a^{n-1}, a^n for the " + std::to_string(generators) +
                " generators a";
  } else {
    r.verdict = Verdict::fail;
    r.message = "extremal catalog differs from {a^{n-1}, a^n : a generates C_n}";
  }
  return r;
}

}  // namespace zerosum
