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

// zerosum: command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zerosum/zerosum.h"

namespace {

struct Flags {
  bool json = false;
  bool no_timestamp = false;
  std::string output;
  std::optional<std::uint64_t> budget;
  std::optional<std::int64_t> max_len;
  std::optional<std::uint64_t> davenport_cap;
  std::optional<std::uint64_t> subgroup_cap;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::int64_t> n, k, m, length;
  std::optional<std::string> g, h, seq, t, method;
};

zs_options to_options(const Flags& f) {
  zs_options o;
  zs_options_init(&o);
  o.no_timestamp = f.no_timestamp ? 1 : 0;
  if (f.budget) o.budget = *f.budget;
  if (f.max_len) o.max_len = *f.max_len;
  if (f.davenport_cap) o.davenport_cap = *f.davenport_cap;
  if (f.subgroup_cap) o.subgroup_cap = *f.subgroup_cap;
  if (f.seed) o.seed = *f.seed;
  if (f.trials) o.trials = *f.trials;
  if (f.n) o.n = *f.n;
  if (f.k) o.k = *f.k;
  if (f.m) o.m = *f.m;
  if (f.length) o.length = *f.length;
  if (f.g) o.g = f.g->c_str();
  if (f.h) o.h = f.h->c_str();
  if (f.seq) o.seq = f.seq->c_str();
  if (f.t) o.t = f.t->c_str();
  if (f.method) o.method = f.method->c_str();
  return o;
}

int emit(const Flags& f, zs_status status, zs_report* report) {
  if (status != ZS_OK || report == nullptr) {
    std::cerr << "zerosum: " << zs_last_error() << "\n";
    return 2;
  }
  if (!f.output.empty()) {
    std::ofstream file(f.output);
    if (!file) {
      std::cerr << "zerosum: cannot write " << f.output << "\n";
      zs_report_free(report);
      return 2;
    }
    file << zs_report_json(report, 1) << "\n";
  }
  if (f.json) {
    std::cout << zs_report_json(report, 1) << "\n";
  } else {
    std::cout << zs_report_text(report);
  }
  const int code = zs_report_exit_code(report);
  if (zs_report_status_of(report) == ZS_REPORT_ERROR) {
    std::cerr << "zerosum: command failed, see report\n";
  }
  zs_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-sum subsequence counting over finite abelian groups"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(zs_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_flag("--json", f.json, "Print the JSON report instead of the table");
  app.add_flag("--no-timestamp", f.no_timestamp, "Omit the provenance timestamp");
  app.add_option("--output", f.output, "Also write the JSON report to this file");
  app.add_option("--budget", f.budget, "Maximum number of sequences counted by a sweep");
  app.add_option("--max-len", f.max_len, "Length cap for sweeps and catalogs");
  app.add_option("--davenport-cap", f.davenport_cap, "Largest group order for exact Davenport search");
  app.add_option("--subgroup-cap", f.subgroup_cap, "Largest group order for subgroup enumeration");
  app.add_option("--seed", f.seed, "Seed for random modes");
  app.add_option("--trials", f.trials, "Random trials (enables random modes)");
  app.add_option("--n", f.n, "Cyclic order for 'verify cn'");
  app.add_option("--k", f.k, "Power of h in the unbounded family");
  app.add_option("--m", f.m, "Length of the constructed extremal sequence");
  app.add_option("--length", f.length, "Sequence length for random search");
  app.add_option("--g", f.g, "Group element");
  app.add_option("--h", f.h, "Element of order 2 generating H");
  app.add_option("--seq", f.seq, "Check a single sequence instead of sweeping");
  app.add_option("--t", f.t, "Divisor T of the sequence for 'verify transform'");
  app.add_option("--method", f.method, "Davenport method: exact, formula or both");

  std::string spec;
  std::string sequence;
  std::string theorem;
  std::string kind;
  std::int64_t conjecture_id = 0;

  auto* group = app.add_subcommand("group", "Group queries");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "Canonical form, order, d*, subgroup count");
  info->add_option("group", spec, "Group spec, e.g. C2xC4")->required();

  auto* count = app.add_subcommand("count", "Subsequence sum counts N_g(S)");
  count->add_option("group", spec)->required();
  count->add_option("sequence", sequence, "Sequence, e.g. \"1^2 2\" or empty")->required();

  auto* dav = app.add_subcommand("davenport", "Davenport constant");
  dav->add_option("group", spec)->required();

  auto* extremal = app.add_subcommand("extremal", "Catalog of extremal sequences");
  extremal->add_option("group", spec)->required();

  auto* verify = app.add_subcommand("verify", "Check a theorem by exhaustive sweep");
  verify->add_option("theorem", theorem,
                     "lower-bound | transform | one-and-all | es-chain | subgroup-es | "
                     "cn | odd-structure | corollary | equivalences")
      ->required();
  verify->add_option("group", spec);

  auto* conj = app.add_subcommand("conjecture", "Search for counterexamples");
  conj->add_option("id", conjecture_id, "1 or 2")->required();
  conj->add_option("group", spec)->required();

  auto* construct = app.add_subcommand("construct", "Build extremal sequences");
  construct->add_option("kind", kind, "extremal | family")->required();
  construct->add_option("group", spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const zs_options opts = to_options(f);
  zs_report* report = nullptr;
  zs_status status = ZS_OK;
  if (info->parsed()) {
    status = zs_cmd_group_info(spec.c_str(), &opts, &report);
  } else if (count->parsed()) {
    status = zs_cmd_count(spec.c_str(), sequence.c_str(), &opts, &report);
  } else if (dav->parsed()) {
    status = zs_cmd_davenport(spec.c_str(), &opts, &report);
  } else if (extremal->parsed()) {
    status = zs_cmd_extremal(spec.c_str(), &opts, &report);
  } else if (verify->parsed()) {
    status = zs_cmd_verify(theorem.c_str(), spec.c_str(), &opts, &report);
  } else if (conj->parsed()) {
    status = zs_cmd_conjecture(conjecture_id, spec.c_str(), &opts, &report);
  } else {
    status = zs_cmd_construct(kind.c_str(), spec.c_str(), &opts, &report);
  }
  return emit(f, status, report);
}
