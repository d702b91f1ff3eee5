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

#include "zerosum/core/verification.hpp"

namespace zerosum {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
    case Verdict::partial:
      return "partial";
  }
  return "unknown";
}

Json to_json(const VerificationReport& r) {
  Json out = Json::object();
  out["check"] = r.check;
  out["verdict"] = std::string(to_string(r.verdict));
  out["message"] = r.message;
  out["details"] = r.details;
  out["witnesses"] = r.witnesses;
  return out;
}

}  // namespace zerosum
