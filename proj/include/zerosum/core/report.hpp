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

#ifndef ZEROSUM_CORE_REPORT_HPP_
#define ZEROSUM_CORE_REPORT_HPP_

#include <string>
#include <string_view>

#include "zerosum/core/verification.hpp"

namespace zerosum {

inline constexpr int kReportSchemaVersion = 1;

enum class Status { pass, fail, partial, error };

std::string_view to_string(Status s);
Status parse_status(std::string_view text);
Status status_of(Verdict v);

// Field names of the serialized form are fixed by the report schema.
struct Report {
  std::string command;
  std::string group;
  Json parameters = Json::object();
  Json result = Json::object();
  Status status = Status::pass;
  Json provenance = Json::object();
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

// Aligned human-readable rendering of the same content.
std::string render_text(const Report& r);

// Exit code contract: 0 for pass or partial, 1 for fail, 2 for error.
int exit_code(Status s);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_REPORT_HPP_
