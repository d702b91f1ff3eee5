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

#include "zerosum/core/davenport.hpp"

#include <bit>
#include <string>
#include <unordered_map>
#include <utility>

#include "zerosum/core/counting.hpp"
#include "zerosum/core/error.hpp"

namespace zerosum {
namespace {

using Mask = std::uint64_t;

// Longest zero-sum-free extension from a given subsum set. The state is
// Sigma-bullet(S) as a bitmask: appending a is legal iff -a is not in it,
// and the new state is X | (X + a). Results are memoized per state, which
// is independent of the order in which terms were added.
class SubsumSearch {
 public:
  explicit SubsumSearch(const Group& g) : group_(g), n_(g.order()) {
    sum_.resize(n_ * n_);
    neg_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      neg_[a] = static_cast<std::uint8_t>(g.neg(a));
      const std::vector<std::size_t> shift = g.translation(a);
      for (std::size_t x = 0; x < n_; ++x) {
        sum_[x * n_ + a] = static_cast<std::uint8_t>(shift[x]);
      }
    }
  }

  static constexpr Mask kZero = 1;

  bool can_append(Mask state, std::size_t a) const {
    return a != 0 && !((state >> neg_[a]) & 1);
  }

  Mask append(Mask state, std::size_t a) const {
    Mask out = state;
    for (Mask rest = state; rest != 0; rest &= rest - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(rest));
      out |= Mask{1} << sum_[x * n_ + a];
    }
    return out;
  }

  std::size_t longest(Mask state) {
    if (const auto it = memo_.find(state); it != memo_.end()) return it->second;
    std::size_t best = 0;
    for (std::size_t a = 1; a < n_; ++a) {
      if (!can_append(state, a)) continue;
      best = std::max(best, 1 + longest(append(state, a)));
    }
    memo_.emplace(state, static_cast<std::uint8_t>(best));
    return best;
  }

  std::size_t states() const { return memo_.size(); }
  std::size_t order() const { return n_; }
  const Group& group() const { return group_; }

 private:
  const Group& group_;
  std::size_t n_;
  std::vector<std::uint8_t> sum_;
  std::vector<std::uint8_t> neg_;
  std::unordered_map<Mask, std::uint8_t> memo_;
};

void require_searchable(const Group& g, std::size_t cap) {
  const std::size_t limit = std::min(cap, kDavenportHardLimit);
  if (g.order() > limit) {
    throw CapExceeded("exact Davenport search is capped at order " +
                      std::to_string(limit) + ", " + format_group(g) +
                      " has order " + std::to_string(g.order()));
  }
}

Sequence basis_witness(const Group& g) {
  Sequence s(g);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::vector<std::int64_t> coords(g.rank(), 0);
    coords[i] = 1;
    s.add(g.index_of(Element{coords}),
          static_cast<std::uint64_t>(g.invariants()[i] - 1));
  }
  return s;
}

bool is_prime_power(std::int64_t n, std::int64_t& prime) {
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      prime = p;
      return n == 1;
    }
  }
  prime = n;
  return n > 1;
}

}  // namespace

std::string_view to_string(DavenportMethod m) {
  switch (m) {
    case DavenportMethod::exact:
      return "exact-search";
    case DavenportMethod::formula:
      return "formula";
    case DavenportMethod::both:
      return "both";
  }
  return "unknown";
}

DavenportMethod parse_davenport_method(std::string_view text) {
  if (text == "exact" || text == "exact-search") return DavenportMethod::exact;
  if (text == "formula") return DavenportMethod::formula;
  if (text == "both") return DavenportMethod::both;
  throw ParseError("unknown Davenport method '" + std::string(text) +
                   "' (expected exact, formula or both)");
}

bool is_zero_sum_free(const Sequence& s) { return count_all(s)[0] == 1; }

DavenportResult davenport_exact(const Group& g, std::size_t cap) {
  require_searchable(g, cap);
  SubsumSearch search(g);
  const std::size_t best = search.longest(SubsumSearch::kZero);
  // Greedy reconstruction: the smallest element that still allows a maximal
  // completion, at every step, yields the lexicographically smallest
  // maximal multiset.
  Sequence witness(g);
  Mask state = SubsumSearch::kZero;
  std::size_t start = 1;
  for (std::size_t remaining = best; remaining > 0; --remaining) {
    bool placed = false;
    for (std::size_t a = start; a < g.order(); ++a) {
      if (!search.can_append(state, a)) continue;
      const Mask next = search.append(state, a);
      if (1 + search.longest(next) == remaining) {
        witness.add(a);
        state = next;
        start = a;
        placed = true;
        break;
      }
    }
    if (!placed) throw InternalError("Davenport witness reconstruction failed");
  }
  return DavenportResult{g, static_cast<std::int64_t>(best) + 1,
                         DavenportMethod::exact, std::move(witness)};
}

std::optional<std::int64_t> davenport_formula(const Group& g) {
  if (g.rank() <= 2) return d_star(g) + 1;
  std::int64_t prime = 0;
  if (!is_prime_power(g.invariants().back(), prime)) return std::nullopt;
  // n_1 | ... | n_r, so every invariant is a power of the same prime.
  return d_star(g) + 1;
}

DavenportResult davenport(const Group& g, DavenportMethod method,
                          std::size_t cap) {
  switch (method) {
    case DavenportMethod::exact:
      return davenport_exact(g, cap);
    case DavenportMethod::formula: {
      const auto value = davenport_formula(g);
      if (!value) {
        throw PreconditionError("no settled formula for D(" + format_group(g) +
                                "); use exact search");
      }
      return DavenportResult{g, *value, DavenportMethod::formula,
                             basis_witness(g)};
    }
    case DavenportMethod::both: {
      DavenportResult exact = davenport_exact(g, cap);
      const auto value = davenport_formula(g);
      if (!value) return exact;
      if (*value != exact.value) {
        throw InternalError("exact search gives D(" + format_group(g) +
                            ") = " + std::to_string(exact.value) +
                            " but the formula gives " + std::to_string(*value));
      }
      exact.method = DavenportMethod::both;
      return exact;
    }
  }
  throw InvalidArgument("unknown Davenport method");
}

std::int64_t DavenportOracle::value(const Group& g) const {
  {
    std::lock_guard lock(mutex_);
    if (const auto it = cache_.find(g.invariants()); it != cache_.end()) {
      return it->second;
    }
  }
  std::int64_t value = 0;
  if (const auto formula = davenport_formula(g)) {
    value = *formula;
  } else {
    value = davenport_exact(g, cap_).value;
  }
  std::lock_guard lock(mutex_);
  cache_.emplace(g.invariants(), value);
  return value;
}

VerificationReport check_davenport_inequalities(const Group& g,
                                                const Subgroup& h,
                                                const DavenportOracle& oracle) {
  VerificationReport r;
  r.check = "davenport-inequalities";
  const Group h_group = subgroup_structure(g, h);
  const Quotient q = quotient_group(g, h);
  const std::int64_t dg = oracle.value(g);
  const std::int64_t dh = oracle.value(h_group);
  const std::int64_t dq = oracle.value(q.group());
  const std::int64_t ds = d_star(g);
  r.details["G"] = format_group(g);
  r.details["H"] = format_group(h_group);
  r.details["G/H"] = format_group(q.group());
  r.details["D(G)"] = dg;
  r.details["D(H)"] = dh;
  r.details["D(G/H)"] = dq;
  r.details["d_star(G)"] = ds;
  const bool subadditive = dg >= dh + dq - 1;
  const bool above_d_star = dg >= ds + 1;
  r.details["D(G) >= D(H)+D(G/H)-1"] = subadditive;
  r.details["D(G) >= d_star(G)+1"] = above_d_star;
  if (subadditive && above_d_star) {
    r.message = std::to_string(dg) + " >= " + std::to_string(dh + dq - 1) +
                " and " + std::to_string(dg) + " >= " + std::to_string(ds + 1);
  } else {
    r.verdict = Verdict::fail;
    r.message = "Davenport inequality violated";
  }
  return r;
}

std::int64_t t_bound(const Group& g, std::int64_t davenport) {
  return davenport + static_cast<std::int64_t>(g.order()) - 1;
}

std::int64_t t_bound(const Group& g, const DavenportOracle& oracle) {
  return t_bound(g, oracle.value(g));
}

std::uint64_t for_each_zero_sum_free(
    const Group& g, std::size_t length,
    const std::function<bool(const Sequence&)>& visit, std::size_t cap) {
  require_searchable(g, cap);
  SubsumSearch search(g);
  std::uint64_t visited = 0;
  bool stop = false;
  Sequence current(g);
  // Depth-first in non-decreasing element order; branches that cannot reach
  // the requested length are cut using the memoized longest extension.
  std::function<void(Mask, std::size_t)> descend = [&](Mask state,
                                                       std::size_t start) {
    if (current.length() == length) {
      ++visited;
      if (!visit(current)) stop = true;
      return;
    }
    for (std::size_t a = start; a < g.order() && !stop; ++a) {
      if (!search.can_append(state, a)) continue;
      const Mask next = search.append(state, a);
      if (current.length() + 1 + search.longest(next) < length) continue;
      current.add(a);
      descend(next, a);
      current.remove(a);
    }
  };
  descend(SubsumSearch::kZero, 1);
  return visited;
}

}  // namespace zerosum
