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

#ifndef ZEROSUM_CORE_COMMANDS_HPP_
#define ZEROSUM_CORE_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "zerosum/core/davenport.hpp"
#include "zerosum/core/report.hpp"
#include "zerosum/core/search.hpp"

namespace zerosum {

struct CommandOptions {
  bool no_timestamp = false;
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::int64_t> max_len;
  std::size_t davenport_cap = kDefaultDavenportCap;
  std::size_t subgroup_cap = 64;
  std::uint64_t seed = 1;
  std::uint64_t trials = 0;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> length;
  std::optional<std::string> g;
  std::optional<std::string> h;
  std::optional<std::string> seq;
  std::optional<std::string> t;
  std::string method = "both";
};

// Every command returns a report; library errors become status "error".
Report cmd_group_info(std::string_view spec, const CommandOptions& opts);
Report cmd_count(std::string_view spec, std::string_view sequence,
                 const CommandOptions& opts);
Report cmd_davenport(std::string_view spec, const CommandOptions& opts);
Report cmd_extremal(std::string_view spec, const CommandOptions& opts);
Report cmd_verify(std::string_view theorem, std::string_view spec,
                  const CommandOptions& opts);
Report cmd_conjecture(std::int64_t id, std::string_view spec,
                      const CommandOptions& opts);
Report cmd_construct(std::string_view kind, std::string_view spec,
                     const CommandOptions& opts);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_COMMANDS_HPP_
