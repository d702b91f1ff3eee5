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

#include "zerosum/core/report.hpp"

#include <sstream>
#include <string>

#include "zerosum/core/error.hpp"

namespace zerosum {
namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return false;
  for (const Json& item : v) {
    if (item.is_structured()) return false;
  }
  return true;
}

void render_value(std::ostringstream& out, const std::string& key, const Json& v,
                  int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, item] : v.items()) render_value(out, k, item, depth + 1);
    return;
  }
  if (v.is_array() && !is_flat(v)) {
    out << pad << key << ": (" << v.size() << ")\n";
    std::size_t i = 0;
    for (const Json& item : v) render_value(out, "[" + std::to_string(i++) + "]", item, depth + 1);
    return;
  }
  if (v.is_array()) {
    out << pad << key << ":";
    if (v.empty()) out << " none";
    std::string sep = " ";
    for (const Json& item : v) {
      out << sep << scalar_text(item);
      sep = ", ";
    }
    out << "\n";
    return;
  }
  out << pad << key << ": " << scalar_text(v) << "\n";
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::partial:
      return "partial";
    case Status::error:
      return "error";
  }
  return "error";
}

Status parse_status(std::string_view text) {
  if (text == "pass") return Status::pass;
  if (text == "fail") return Status::fail;
  if (text == "partial") return Status::partial;
  if (text == "error") return Status::error;
  throw ParseError("unknown status '" + std::string(text) + "'");
}

Status status_of(Verdict v) {
  switch (v) {
    case Verdict::pass:
    case Verdict::skipped:
      return Status::pass;
    case Verdict::fail:
      return Status::fail;
    case Verdict::partial:
      return Status::partial;
  }
  return Status::error;
}

Json to_json(const Report& r) {
  Json j = Json::object();
  j["command"] = r.command;
  j["group"] = r.group;
  j["parameters"] = r.parameters;
  j["result"] = r.result;
  j["status"] = to_string(r.status);
  j["provenance"] = r.provenance;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.group = j.at("group").get<std::string>();
  r.parameters = j.at("parameters");
  r.result = j.at("result");
  r.status = parse_status(j.at("status").get<std::string>());
  r.provenance = j.at("provenance");
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command    " << r.command << "\n";
  out << "group      " << (r.group.empty() ? "-" : r.group) << "\n";
  out << "status     " << to_string(r.status) << "\n";
  if (!r.parameters.empty()) {
    out << "parameters";
    std::string sep = " ";
    for (const auto& [k, v] : r.parameters.items()) {
      out << sep << k << "=" << scalar_text(v);
      sep = ", ";
    }
    out << "\n";
  }
  out << "result\n";
  for (const auto& [k, v] : r.result.items()) render_value(out, k, v, 1);
  return out.str();
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass:
    case Status::partial:
      return 0;
    case Status::fail:
      return 1;
    case Status::error:
      return 2;
  }
  return 2;
}

}  // namespace zerosum
