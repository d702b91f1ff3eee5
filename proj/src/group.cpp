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

#include "zerosum/core/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "zerosum/core/error.hpp"

namespace zerosum {
namespace {

constexpr std::size_t kMaxOrder = std::size_t{1} << 62;

std::int64_t mod(std::int64_t value, std::int64_t n) {
  const std::int64_t r = value % n;
  return r < 0 ? r + n : r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::int64_t parse_int(std::string_view text, std::string_view context) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed integer '" + std::string(text) + "' in " +
                     std::string(context));
  }
  return value;
}

}  // namespace

Group::Group(std::vector<std::int64_t> invariants)
    : invariants_(std::move(invariants)) {
  order_ = 1;
  for (const std::int64_t n : invariants_) {
    order_ *= static_cast<std::size_t>(n);
  }
}

Group Group::from_invariants(std::vector<std::int64_t> invariants) {
  BigInt order = 1;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (invariants[i] < 2) {
      throw InvalidArgument("invariant factors must be at least 2");
    }
    if (i > 0 && invariants[i] % invariants[i - 1] != 0) {
      throw InvalidArgument("invariant factors must form a divisibility chain");
    }
    order *= invariants[i];
  }
  if (order > kMaxOrder) throw CapExceeded("group order too large");
  return Group(std::move(invariants));
}

bool Group::is_valid(const Element& e) const {
  if (e.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (e.coords[i] < 0 || e.coords[i] >= invariants_[i]) return false;
  }
  return true;
}

Element Group::reduce(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank()) {
    throw InvalidArgument("element has " + std::to_string(coords.size()) +
                          " coordinates, group has rank " +
                          std::to_string(rank()));
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    coords[i] = mod(coords[i], invariants_[i]);
  }
  return Element{std::move(coords)};
}

std::size_t Group::index_of(const Element& e) const {
  if (!is_valid(e)) throw InvalidArgument("element does not belong to group");
  std::size_t index = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    index = index * static_cast<std::size_t>(invariants_[i]) +
            static_cast<std::size_t>(e.coords[i]);
  }
  return index;
}

Element Group::element_at(std::size_t index) const {
  if (index >= order_) throw InvalidArgument("element index out of range");
  Element e{std::vector<std::int64_t>(rank(), 0)};
  for (std::size_t i = rank(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(invariants_[i]);
    e.coords[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return e;
}

std::size_t Group::add(std::size_t a, std::size_t b) const {
  std::size_t result = 0;
  std::size_t stride = 1;
  for (std::size_t i = rank(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(invariants_[i]);
    const std::size_t digit = (a % n + b % n) % n;
    result += digit * stride;
    stride *= n;
    a /= n;
    b /= n;
  }
  return result;
}

std::size_t Group::neg(std::size_t a) const {
  std::size_t result = 0;
  std::size_t stride = 1;
  for (std::size_t i = rank(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(invariants_[i]);
    const std::size_t digit = (n - a % n) % n;
    result += digit * stride;
    stride *= n;
    a /= n;
  }
  return result;
}

std::size_t Group::scale(std::int64_t k, std::size_t a) const {
  std::size_t result = 0;
  std::size_t stride = 1;
  for (std::size_t i = rank(); i-- > 0;) {
    const std::int64_t n = invariants_[i];
    const auto un = static_cast<std::size_t>(n);
    const auto kk = static_cast<unsigned __int128>(mod(k, n));
    const auto digit =
        static_cast<std::size_t>((kk * (a % un)) % static_cast<unsigned __int128>(un));
    result += digit * stride;
    stride *= un;
    a /= un;
  }
  return result;
}

std::vector<std::size_t> Group::translation(std::size_t a) const {
  std::vector<std::size_t> table(order_);
  // Walk g in index order with an odometer so each step is O(1) amortized.
  const Element shift = element_at(a);
  std::vector<std::int64_t> digits(rank(), 0);
  for (std::size_t g = 0; g < order_; ++g) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::int64_t n = invariants_[i];
      index = index * static_cast<std::size_t>(n) +
              static_cast<std::size_t>((digits[i] + shift.coords[i]) % n);
    }
    table[g] = index;
    for (std::size_t i = rank(); i-- > 0;) {
      if (++digits[i] < invariants_[i]) break;
      digits[i] = 0;
    }
  }
  return table;
}

bool Subgroup::contains(std::size_t index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

std::vector<Element> Subgroup::elements(const Group& g) const {
  std::vector<Element> out;
  out.reserve(members.size());
  for (const std::size_t m : members) out.push_back(g.element_at(m));
  return out;
}

Group make_group(std::span<const std::int64_t> spec) {
  for (const std::int64_t n : spec) {
    if (n < 1) throw InvalidArgument("invalid modulus " + std::to_string(n));
  }
  if (spec.empty()) return Group();
  IntMatrix relations(spec.size(), std::vector<BigInt>(spec.size(), 0));
  for (std::size_t i = 0; i < spec.size(); ++i) relations[i][i] = spec[i];
  const SmithForm snf = smith_normal_form(relations);
  std::vector<std::int64_t> invariants;
  for (const BigInt& d : snf.diagonal) {
    if (d > std::numeric_limits<std::int64_t>::max()) {
      throw CapExceeded("group order too large");
    }
    if (d != 1) invariants.push_back(static_cast<std::int64_t>(d));
  }
  return Group::from_invariants(std::move(invariants));
}

Group parse_group(std::string_view text) {
  std::string compact;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      compact.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (compact.empty()) throw ParseError("empty group specification");
  std::vector<std::int64_t> spec;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t next = compact.find('x', pos);
    const std::string_view factor = std::string_view(compact).substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    if (factor.size() < 2 || factor.front() != 'c') {
      throw ParseError("malformed group factor '" + std::string(factor) +
                       "' in '" + std::string(text) + "'");
    }
    const std::string_view digits = factor.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw ParseError("malformed group factor '" + std::string(factor) + "'");
    }
    const std::int64_t n = parse_int(digits, "group specification");
    if (n < 1) throw ParseError("invalid modulus " + std::to_string(n));
    spec.push_back(n);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return make_group(spec);
}

std::string format_group(const Group& g) {
  if (g.is_trivial()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (i > 0) out += 'x';
    out += 'C' + std::to_string(g.invariants()[i]);
  }
  return out;
}

namespace {

void require_member(const Group& g, const Element& e) {
  if (e.coords.size() != g.rank()) {
    throw InvalidArgument("element arity " + std::to_string(e.coords.size()) +
                          " does not match group rank " +
                          std::to_string(g.rank()));
  }
  if (!g.is_valid(e)) throw InvalidArgument("element coordinates out of range");
}

}  // namespace

Element elem_add(const Group& g, const Element& a, const Element& b) {
  require_member(g, a);
  require_member(g, b);
  std::vector<std::int64_t> c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    c[i] = (a.coords[i] + b.coords[i]) % g.invariants()[i];
  }
  return Element{std::move(c)};
}

Element elem_neg(const Group& g, const Element& a) {
  require_member(g, a);
  std::vector<std::int64_t> c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    c[i] = mod(-a.coords[i], g.invariants()[i]);
  }
  return Element{std::move(c)};
}

Element elem_scale(const Group& g, std::int64_t k, const Element& a) {
  require_member(g, a);
  std::vector<std::int64_t> c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::int64_t n = g.invariants()[i];
    c[i] = static_cast<std::int64_t>(
        (static_cast<__int128>(mod(k, n)) * a.coords[i]) % n);
  }
  return Element{std::move(c)};
}

std::int64_t elem_order(const Group& g, const Element& a) {
  require_member(g, a);
  std::int64_t order = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::int64_t n = g.invariants()[i];
    order = std::lcm(order, n / std::gcd(a.coords[i], n));
  }
  return order;
}

std::int64_t index_order(const Group& g, std::size_t a) {
  return elem_order(g, g.element_at(a));
}

std::string format_element(const Group& g, const Element& e) {
  if (g.rank() == 1 && e.coords.size() == 1) {
    return std::to_string(e.coords[0]);
  }
  std::string out = "(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(e.coords[i]);
  }
  return out + ")";
}

std::string format_index(const Group& g, std::size_t index) {
  return format_element(g, g.element_at(index));
}

Element parse_element(const Group& g, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty element");
  std::vector<std::int64_t> coords;
  if (text.front() == '(') {
    if (text.back() != ')') {
      throw ParseError("unterminated element '" + std::string(text) + "'");
    }
    const std::string_view inner = trim(text.substr(1, text.size() - 2));
    if (!inner.empty()) {
      std::size_t pos = 0;
      while (true) {
        const std::size_t comma = inner.find(',', pos);
        coords.push_back(parse_int(
            inner.substr(pos, comma == std::string_view::npos
                                  ? std::string_view::npos
                                  : comma - pos),
            "element '" + std::string(text) + "'"));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
    }
  } else {
    if (g.rank() > 1) {
      throw ParseError("element '" + std::string(text) + "' needs " +
                       std::to_string(g.rank()) + " coordinates");
    }
    const std::int64_t value =
        parse_int(text, "element '" + std::string(text) + "'");
    if (g.rank() == 1) coords.push_back(value);
  }
  if (coords.size() != g.rank()) {
    throw ParseError("element '" + std::string(text) + "' has " +
                     std::to_string(coords.size()) +
                     " coordinates, group has rank " +
                     std::to_string(g.rank()));
  }
  return g.reduce(std::move(coords));
}

std::vector<Element> all_elements(const Group& g) {
  std::vector<Element> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
  return out;
}

std::vector<Subgroup> order_two_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (std::size_t h = 1; h < g.order(); ++h) {
    if (g.add(h, h) == 0) {
      out.push_back(Subgroup{{g.element_at(h)}, {0, h}});
    }
  }
  return out;
}

Subgroup subgroup_closure_indices(const Group& g,
                                  std::span<const std::size_t> generators) {
  std::vector<std::vector<std::size_t>> shifts;
  Subgroup out;
  for (const std::size_t gen : generators) {
    if (gen >= g.order()) throw InvalidArgument("generator outside group");
    out.generators.push_back(g.element_at(gen));
    if (gen != 0) shifts.push_back(g.translation(gen));
  }
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> frontier{0};
  seen[0] = true;
  while (!frontier.empty()) {
    const std::size_t x = frontier.back();
    frontier.pop_back();
    out.members.push_back(x);
    for (const auto& shift : shifts) {
      const std::size_t y = shift[x];
      if (!seen[y]) {
        seen[y] = true;
        frontier.push_back(y);
      }
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

Subgroup subgroup_closure(const Group& g, std::span<const Element> generators) {
  std::vector<std::size_t> indices;
  indices.reserve(generators.size());
  for (const Element& e : generators) {
    require_member(g, e);
    indices.push_back(g.index_of(e));
  }
  return subgroup_closure_indices(g, indices);
}

std::vector<Subgroup> all_subgroups(const Group& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("subgroup enumeration capped at order " +
                      std::to_string(cap) + ", group has order " +
                      std::to_string(g.order()));
  }
  // Cyclic subgroups first, then joins with cyclic subgroups until no new
  // subgroup appears; every subgroup is a finite join of cyclic ones.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> cyclic_gens;
  for (std::size_t a = 0; a < g.order(); ++a) {
    const std::size_t gens[] = {a};
    Subgroup c = subgroup_closure_indices(g, gens);
    if (found.emplace(c.members, std::vector<std::size_t>{a}).second) {
      cyclic_gens.push_back({a});
    }
  }
  std::vector<std::vector<std::size_t>> pending;
  for (const auto& [members, gens] : found) pending.push_back(gens);
  while (!pending.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& gens : pending) {
      for (const auto& c : cyclic_gens) {
        std::vector<std::size_t> joined = gens;
        joined.push_back(c.front());
        Subgroup j = subgroup_closure_indices(g, joined);
        if (found.emplace(j.members, joined).second) next.push_back(joined);
      }
    }
    pending = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [members, gens] : found) {
    Subgroup s;
    s.members = members;
    for (const std::size_t x : gens) {
      if (x != 0) s.generators.push_back(g.element_at(x));
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

Group subgroup_structure(const Group& g, const Subgroup& h) {
  std::vector<std::int64_t> factors;
  std::size_t remaining = h.order();
  std::vector<std::int64_t> primes;
  for (std::size_t p = 2; p * p <= remaining; ++p) {
    if (remaining % p == 0) {
      primes.push_back(static_cast<std::int64_t>(p));
      while (remaining % p == 0) remaining /= p;
    }
  }
  if (remaining > 1) primes.push_back(static_cast<std::int64_t>(remaining));

  for (const std::int64_t p : primes) {
    std::size_t p_part = 1;
    for (std::size_t n = h.order(); n % static_cast<std::size_t>(p) == 0;
         n /= static_cast<std::size_t>(p)) {
      p_part *= static_cast<std::size_t>(p);
    }
    // log_p |H[p^k]| = sum_i min(k, e_i); successive differences give the
    // number of cyclic p-factors of exponent >= k.
    std::vector<std::size_t> at_least;
    std::size_t previous_log = 0;
    std::int64_t pk = 1;
    for (std::size_t k = 1;; ++k) {
      pk *= p;
      std::size_t killed = 0;
      for (const std::size_t x : h.members) {
        if (g.scale(pk, x) == 0) ++killed;
      }
      std::size_t log = 0;
      for (std::size_t v = killed; v > 1; v /= static_cast<std::size_t>(p)) {
        ++log;
      }
      at_least.push_back(log - previous_log);
      previous_log = log;
      if (killed == p_part) break;
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      const std::size_t exactly = at_least[k] - next;
      std::int64_t q = 1;
      for (std::size_t i = 0; i <= k; ++i) q *= p;
      for (std::size_t i = 0; i < exactly; ++i) factors.push_back(q);
    }
  }
  return make_group(factors);
}

std::int64_t d_star(const Group& g) {
  std::int64_t total = 0;
  for (const std::int64_t n : g.invariants()) total += n - 1;
  return total;
}

Quotient::Quotient(Group source, Group target,
                   std::vector<std::vector<std::int64_t>> rows)
    : source_(std::move(source)),
      target_(std::move(target)),
      rows_(std::move(rows)) {
  if (source_.order() <= (std::size_t{1} << 20)) {
    index_map_.resize(source_.order());
    for (std::size_t i = 0; i < source_.order(); ++i) {
      index_map_[i] = target_.index_of(project(source_.element_at(i)));
    }
  }
}

Element Quotient::project(const Element& e) const {
  require_member(source_, e);
  std::vector<std::int64_t> coords(target_.rank(), 0);
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    const std::int64_t n = target_.invariants()[i];
    __int128 acc = 0;
    for (std::size_t j = 0; j < source_.rank(); ++j) {
      acc = (acc + static_cast<__int128>(rows_[i][j]) * e.coords[j]) % n;
    }
    coords[i] = static_cast<std::int64_t>(acc);
  }
  return Element{std::move(coords)};
}

std::size_t Quotient::project_index(std::size_t index) const {
  if (!index_map_.empty()) return index_map_.at(index);
  return target_.index_of(project(source_.element_at(index)));
}

Quotient quotient_group(const Group& g, const Subgroup& h) {
  std::vector<Element> gens = h.generators;
  for (const Element& e : gens) {
    if (!g.is_valid(e)) {
      throw InvalidArgument("subgroup generator is not an element of the group");
    }
  }
  for (const std::size_t m : h.members) {
    if (m >= g.order()) {
      throw InvalidArgument("subgroup is not contained in the group");
    }
  }
  if (gens.empty()) {
    for (const std::size_t m : h.members) {
      if (m != 0) gens.push_back(g.element_at(m));
    }
  }
  const std::size_t r = g.rank();
  if (r == 0) return Quotient(g, Group(), {});
  // Columns: the defining relations n_i e_i, then the generators of H.
  IntMatrix relations(r, std::vector<BigInt>(r + gens.size(), 0));
  for (std::size_t i = 0; i < r; ++i) {
    relations[i][i] = g.invariants()[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      relations[i][r + j] = gens[j].coords[i];
    }
  }
  const SmithForm snf = smith_normal_form(relations);
  std::vector<std::int64_t> invariants;
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < r; ++i) {
    const BigInt& d = snf.diagonal[i];
    if (d == 0) throw InternalError("quotient of a finite group is infinite");
    if (d == 1) continue;
    const auto n = static_cast<std::int64_t>(d);
    std::vector<std::int64_t> row(r);
    for (std::size_t j = 0; j < r; ++j) {
      BigInt v = snf.left[i][j] % d;
      if (v < 0) v += d;
      row[j] = static_cast<std::int64_t>(v);
    }
    invariants.push_back(n);
    rows.push_back(std::move(row));
  }
  return Quotient(g, Group::from_invariants(std::move(invariants)),
                  std::move(rows));
}

}  // namespace zerosum
