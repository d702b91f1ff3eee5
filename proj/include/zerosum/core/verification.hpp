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

#ifndef ZEROSUM_CORE_VERIFICATION_HPP_
#define ZEROSUM_CORE_VERIFICATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace zerosum {

using Json = nlohmann::ordered_json;

enum class Verdict {
  pass,
  fail,
  // A precondition did not hold; `message` says which.
  skipped,
  // No failure seen, but a budget cap truncated the sweep.
  partial,
};

std::string_view to_string(Verdict v);

// Outcome of one theorem or conjecture check. `details` carries the
// check-specific numbers (counts, bounds, caps); witnesses are formatted
// sequences or elements in canonical order.
struct VerificationReport {
  std::string check;
  Verdict verdict = Verdict::pass;
  std::string message;
  Json details = Json::object();
  std::vector<std::string> witnesses;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }
};

Json to_json(const VerificationReport& r);

}  // namespace zerosum

#endif  // ZEROSUM_CORE_VERIFICATION_HPP_
