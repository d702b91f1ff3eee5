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

#include "zerosum/core/counting.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <utility>

#include "zerosum/core/error.hpp"

namespace zerosum {
namespace {

template <typename Count>
std::vector<Count> count_kernel(const Sequence& s) {
  const Group& g = s.group();
  std::vector<Count> current(g.order(), Count(0));
  std::vector<Count> next(g.order(), Count(0));
  current[0] = 1;
  for (const std::size_t a : s.support()) {
    // back[x] = x - a
    const std::vector<std::size_t> back = g.translation(g.neg(a));
    for (std::uint64_t k = 0; k < s.multiplicity(a); ++k) {
      for (std::size_t x = 0; x < g.order(); ++x) {
        next[x] = current[x] + current[back[x]];
      }
      std::swap(current, next);
    }
  }
  return current;
}

std::string bound_text(std::int64_t exponent) {
  return exponent >= 0 ? "2^" + std::to_string(exponent)
                       : "2^(" + std::to_string(exponent) + ")";
}

// N >= 2^e, also meaningful for negative e.
bool at_least_pow2(const BigInt& n, std::int64_t exponent) {
  if (exponent <= 0) return n >= 1;
  return n >= pow2(exponent);
}

}  // namespace

CountVector::CountVector(Group group, std::vector<BigInt> counts,
                         std::size_t source_length)
    : group_(std::move(group)),
      counts_(std::move(counts)),
      source_length_(source_length) {
  if (counts_.size() != group_.order()) {
    throw InvalidArgument("count vector size does not match group order");
  }
}

const BigInt& CountVector::at(const Element& e) const {
  return counts_[group_.index_of(e)];
}

BigInt CountVector::total() const {
  BigInt sum = 0;
  for (const BigInt& c : counts_) sum += c;
  return sum;
}

BigInt pow2(std::int64_t e) {
  if (e < 0) throw InvalidArgument("negative power of two");
  BigInt one = 1;
  return one << static_cast<unsigned>(e);
}

namespace {
CountObserver observer;
}  // namespace

CountObserver set_count_observer(CountObserver o) {
  std::swap(observer, o);
  return o;
}

CountVector count_all(const Sequence& s) {
  std::vector<BigInt> counts;
  if (s.length() < 64) {
    const std::vector<std::uint64_t> fast = count_kernel<std::uint64_t>(s);
    counts.assign(fast.begin(), fast.end());
  } else {
    counts = count_kernel<BigInt>(s);
  }
  CountVector out(s.group(), std::move(counts), s.length());
  if (observer) observer(out);
  return out;
}

std::uint64_t count_brute(const Sequence& s, const Element& g) {
  if (s.length() > kBruteForceCap) {
    throw CapExceeded("brute-force counting is capped at length " +
                      std::to_string(kBruteForceCap));
  }
  const Group& group = s.group();
  if (!group.is_valid(g)) throw InvalidArgument("target is not a group element");
  std::vector<Element> terms;
  for (const std::size_t t : s.terms()) terms.push_back(group.element_at(t));
  const std::size_t r = group.rank();
  const auto& n = group.invariants();
  std::vector<std::int64_t> sum(r, 0);
  // Gray-code walk: subset i differs from subset i-1 in exactly one term.
  std::uint64_t hits = (sum == g.coords) ? 1 : 0;
  const std::uint64_t subsets = std::uint64_t{1} << terms.size();
  for (std::uint64_t i = 1; i < subsets; ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    const bool now_in = ((i ^ (i >> 1)) >> bit) & 1;
    for (std::size_t c = 0; c < r; ++c) {
      const std::int64_t delta = now_in ? terms[bit].coords[c]
                                        : n[c] - terms[bit].coords[c];
      sum[c] = (sum[c] + delta) % n[c];
    }
    if (sum == g.coords) ++hits;
  }
  return hits;
}

std::vector<std::size_t> subsums(const Sequence& s) {
  const Group& g = s.group();
  std::vector<bool> reach(g.order(), false);
  reach[0] = true;
  for (const std::size_t a : s.support()) {
    const std::vector<std::size_t> shift = g.translation(a);
    for (std::uint64_t k = 0; k < s.multiplicity(a); ++k) {
      std::vector<bool> next = reach;
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (reach[x]) next[shift[x]] = true;
      }
      if (next == reach) break;
      reach = std::move(next);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (reach[x]) out.push_back(x);
  }
  return out;
}

bool ExtremalSet::contains(std::size_t index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

void require_extremal_domain(std::size_t length, std::int64_t davenport) {
  if (static_cast<std::int64_t>(length) < davenport - 1) {
    throw PreconditionError("E(S) is defined only for |S| >= D(G) - 1 (|S| = " +
                            std::to_string(length) +
                            ", D = " + std::to_string(davenport) + ")");
  }
}

ExtremalSet extremal_set(const CountVector& counts, std::int64_t davenport) {
  require_extremal_domain(counts.source_length(), davenport);
  const std::int64_t exponent =
      static_cast<std::int64_t>(counts.source_length()) - davenport + 1;
  ExtremalSet out{counts.group(), {}, exponent};
  const BigInt target = pow2(exponent);
  for (std::size_t g = 0; g < counts.group().order(); ++g) {
    if (counts[g] == target) out.members.push_back(g);
  }
  return out;
}

ExtremalSet extremal_set(const Sequence& s, std::int64_t davenport) {
  require_extremal_domain(s.length(), davenport);
  return extremal_set(count_all(s), davenport);
}

Sequence transform(const Sequence& s, const Sequence& t) {
  return seq_mul(t, seq_neg(seq_div(s, t)));
}

VerificationReport check_lower_bound(const CountVector& counts,
                                     std::int64_t davenport) {
  VerificationReport r;
  r.check = "lower-bound";
  const std::int64_t exponent =
      static_cast<std::int64_t>(counts.source_length()) - davenport + 1;
  r.details["bound"] = bound_text(exponent);
  BigInt minimum = -1;
  std::size_t violations = 0;
  for (std::size_t g = 0; g < counts.group().order(); ++g) {
    const BigInt& n = counts[g];
    if (n == 0) continue;  // g outside Sigma-bullet(S)
    if (minimum < 0 || n < minimum) minimum = n;
    if (!at_least_pow2(n, exponent)) {
      ++violations;
      r.witnesses.push_back(format_index(counts.group(), g));
    }
  }
  r.details["min_count_on_subsums"] = minimum.str();
  r.details["violations"] = violations;
  if (violations > 0) {
    r.verdict = Verdict::fail;
    r.message = "N_g(S) below " + bound_text(exponent) + " for some g in the subsum set";
  } else {
    r.message = "N_g(S) >= " + bound_text(exponent) + " on every subsum";
  }
  return r;
}

VerificationReport check_lower_bound(const Sequence& s, std::int64_t davenport) {
  VerificationReport r = check_lower_bound(count_all(s), davenport);
  r.details["sequence"] = format_sequence(s);
  return r;
}

VerificationReport check_transform(const Sequence& s, const Sequence& t) {
  VerificationReport r;
  r.check = "transform";
  const Sequence w = transform(s, t);
  const std::size_t target = seq_sum_index(t);
  const BigInt lhs = count_all(s)[target];
  const BigInt rhs = count_all(w)[0];
  r.details["S"] = format_sequence(s);
  r.details["T"] = format_sequence(t);
  r.details["W"] = format_sequence(w);
  r.details["g"] = format_index(s.group(), target);
  r.details["N_g(S)"] = lhs.str();
  r.details["N_0(W)"] = rhs.str();
  if (lhs != rhs || w.length() != s.length()) {
    r.verdict = Verdict::fail;
    r.message = "N_g(S) != N_0(W)";
    r.witnesses.push_back(format_sequence(s) + " / " + format_sequence(t));
  } else {
    r.message = "N_g(S) = N_0(W) = " + lhs.str();
  }
  return r;
}

VerificationReport check_one_and_all(const CountVector& counts,
                                     std::int64_t davenport) {
  VerificationReport r;
  r.check = "one-and-all";
  const std::int64_t exponent =
      static_cast<std::int64_t>(counts.source_length()) - davenport + 1;
  if (exponent < 0) {
    r.message = "vacuous: no count can equal " + bound_text(exponent);
    r.details["extremal_set_size"] = 0;
    return r;
  }
  const ExtremalSet e = extremal_set(counts, davenport);
  r.details["extremal_set_size"] = e.members.size();
  if (e.empty()) {
    r.message = "vacuous: E(S) is empty";
    return r;
  }
  for (std::size_t g = 0; g < counts.group().order(); ++g) {
    if (!at_least_pow2(counts[g], exponent)) {
      r.witnesses.push_back(format_index(counts.group(), g));
    }
  }
  if (!r.witnesses.empty()) {
    r.verdict = Verdict::fail;
    r.message = "E(S) nonempty but some N_g(S) < " + bound_text(exponent);
  } else {
    r.message = "E(S) nonempty and every N_g(S) >= " + bound_text(exponent);
  }
  return r;
}

VerificationReport check_one_and_all(const Sequence& s, std::int64_t davenport) {
  VerificationReport r = check_one_and_all(count_all(s), davenport);
  r.details["sequence"] = format_sequence(s);
  return r;
}

VerificationReport pushforward_counts(const Sequence& s, const Subgroup& h) {
  VerificationReport r;
  r.check = "pushforward";
  const Quotient q = quotient_group(s.group(), h);
  const CountVector counts = count_all(s);
  BigInt left = 0;
  for (const std::size_t m : h.members) left += counts[m];
  Sequence image(q.group());
  for (const std::size_t a : s.support()) {
    image.add(q.project_index(a), s.multiplicity(a));
  }
  const BigInt right = count_all(image)[0];
  r.details["sequence"] = format_sequence(s);
  r.details["quotient"] = format_group(q.group());
  r.details["image"] = format_sequence(image);
  r.details["sum_over_H"] = left.str();
  r.details["N_0_image"] = right.str();
  if (left != right) {
    r.verdict = Verdict::fail;
    r.message = "sum of N_h(S) over H differs from N_0(phi(S))";
  } else {
    r.message = "sum of N_h(S) over H = N_0(phi(S)) = " + left.str();
  }
  return r;
}

}  // namespace zerosum
