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

#ifndef ZEROSUM_TESTS_SUPPORT_HPP_
#define ZEROSUM_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "oracle.hpp"
#include "zerosum/core/group.hpp"
#include "zerosum/core/sequence.hpp"

namespace zs_test {

inline oracle::Mods mods(const zerosum::Group& g) { return g.invariants(); }

inline std::vector<oracle::Vec> terms_of(const zerosum::Sequence& s) {
  std::vector<oracle::Vec> out;
  for (const std::size_t t : s.terms()) out.push_back(s.group().element_at(t).coords);
  return out;
}

inline zerosum::Sequence seq(const zerosum::Group& g, const std::string& text) {
  return zerosum::parse_sequence(g, text);
}

inline zerosum::Group grp(const std::string& spec) { return zerosum::parse_group(spec); }

// Every group with |G| <= max_order, one per isomorphism class.
inline std::vector<zerosum::Group> groups_up_to(std::size_t max_order) {
  std::vector<zerosum::Group> out;
  std::vector<std::vector<std::int64_t>> chains;
  std::vector<std::int64_t> cur;
  // Invariant chains n1 | n2 | ... with each n_i > 1.
  auto rec = [&](auto&& self, std::int64_t prev, std::size_t order) -> void {
    if (!cur.empty()) chains.push_back(cur);
    for (std::int64_t n = 2; order * static_cast<std::size_t>(n) <= max_order; ++n) {
      if (!cur.empty() && n % prev != 0) continue;
      cur.push_back(n);
      self(self, n, order * static_cast<std::size_t>(n));
      cur.pop_back();
    }
  };
  rec(rec, 1, 1);
  for (const auto& c : chains) out.push_back(zerosum::make_group(c));
  return out;
}

}  // namespace zs_test

#endif  // ZEROSUM_TESTS_SUPPORT_HPP_
