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

#include "zerosum/core/commands.hpp"

#include <chrono>
#include <ctime>
#include <string>
#include <utility>

#include "zerosum/core/counting.hpp"
#include "zerosum/core/error.hpp"
#include "zerosum/core/group.hpp"
#include "zerosum/core/sequence.hpp"
#include "zerosum/core/structure.hpp"
#include "zerosum/core/sweeps.hpp"

#ifndef ZEROSUM_VERSION
#define ZEROSUM_VERSION "0.0.0"
#endif

namespace zerosum {
namespace {

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json provenance(const CommandOptions& opts) {
  Json p = Json::object();
  p["tool"] = "zerosum";
  p["version"] = ZEROSUM_VERSION;
  p["schema_version"] = kReportSchemaVersion;
  p["seed"] = opts.seed;
  Json caps = Json::object();
  caps["budget"] = opts.budget;
  caps["max_len"] = opts.max_len ? Json(*opts.max_len) : Json();
  caps["davenport_cap"] = opts.davenport_cap;
  caps["subgroup_cap"] = opts.subgroup_cap;
  p["caps"] = std::move(caps);
  if (!opts.no_timestamp) p["timestamp"] = utc_timestamp();
  return p;
}

template <typename Body>
Report run(std::string command, std::string_view spec, const CommandOptions& opts,
           Body body) {
  Report r;
  r.command = std::move(command);
  r.group = std::string(spec);
  r.provenance = provenance(opts);
  auto fail = [&](std::string_view kind, const std::exception& e) {
    r.status = Status::error;
    r.result = Json::object();
    r.result["error"] = e.what();
    r.result["error_kind"] = kind;
  };
  try {
    body(r);
  } catch (const ParseError& e) {
    fail("parse", e);
  } catch (const InvalidArgument& e) {
    fail("invalid_argument", e);
  } catch (const CapExceeded& e) {
    fail("cap_exceeded", e);
  } catch (const PreconditionError& e) {
    fail("precondition", e);
  } catch (const std::exception& e) {
    fail("internal", e);
  }
  return r;
}

Group load_group(Report& r, std::string_view spec) {
  Group g = parse_group(spec);
  r.group = format_group(g);
  return g;
}

std::string bound_text(std::int64_t e) { return "2^" + std::to_string(e); }

Json index_list(const Group& g, const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (const std::size_t x : xs) out.push_back(format_index(g, x));
  return out;
}

void attach(Report& r, const VerificationReport& v) {
  r.result = to_json(v);
  r.status = status_of(v.verdict);
}

std::int64_t require(const std::optional<std::int64_t>& v, const char* name) {
  if (!v) throw InvalidArgument(std::string("--") + name + " is required");
  return *v;
}

VerificationReport verify_single(std::string_view theorem, const Group& g,
                                 const Sequence& s, const DavenportOracle& oracle,
                                 const CommandOptions& opts, Report& r) {
  const std::int64_t d = oracle.value(g);
  if (theorem == "lower-bound") return check_lower_bound(s, d);
  if (theorem == "one-and-all") return check_one_and_all(s, d);
  if (theorem == "odd-structure") return check_odd_group_structure(s, d);
  if (theorem == "corollary") return check_corollary_decomposition(s, d);
  if (theorem == "transform") {
    if (!opts.t) throw InvalidArgument("--t is required with --seq for transform");
    const Sequence t = parse_sequence(g, *opts.t);
    if (!divides(t, s)) throw InvalidArgument("T does not divide S");
    r.parameters["t"] = format_sequence(t);
    return check_transform(s, t);
  }
  if (theorem == "es-chain") {
    if (!opts.g) throw InvalidArgument("--g is required with --seq for es-chain");
    const Element a = parse_element(g, *opts.g);
    r.parameters["g"] = format_element(g, a);
    return check_es_chain(s, a, d);
  }
  if (theorem == "subgroup-es") {
    const ExtremalSubgroups found =
        max_subgroups_in_extremal_set(extremal_set(s, d), d, oracle, opts.subgroup_cap);
    VerificationReport v = found.verdict;
    Json list = Json::array();
    for (std::size_t i = 0; i < found.contained.size(); ++i) {
      Json item = Json::object();
      item["members"] = index_list(g, found.contained[i].members);
      item["maximal"] = static_cast<bool>(found.maximal[i]);
      list.push_back(std::move(item));
    }
    v.details["subgroups"] = std::move(list);
    return v;
  }
  throw InvalidArgument("theorem '" + std::string(theorem) +
                        "' has no single-sequence check");
}

}  // namespace

Report cmd_group_info(std::string_view spec, const CommandOptions& opts) {
  return run("group info", spec, opts, [&](Report& r) {
    const Group g = load_group(r, spec);
    r.result["canonical"] = format_group(g);
    r.result["invariants"] = g.invariants();
    r.result["order"] = g.order();
    r.result["rank"] = g.rank();
    r.result["trivial"] = g.is_trivial();
    r.result["d_star"] = d_star(g);
    if (const auto f = davenport_formula(g)) {
      r.result["davenport_formula"] = *f;
    } else {
      r.result["davenport_formula"] = nullptr;
    }
    try {
      r.result["subgroup_count"] = all_subgroups(g, opts.subgroup_cap).size();
    } catch (const CapExceeded&) {
      r.result["subgroup_count"] = nullptr;
      r.result["subgroup_note"] = "order exceeds the subgroup cap " +
                                  std::to_string(opts.subgroup_cap);
    }
  });
}

Report cmd_count(std::string_view spec, std::string_view sequence,
                 const CommandOptions& opts) {
  return run("count", spec, opts, [&](Report& r) {
    const Group g = load_group(r, spec);
    const Sequence s = parse_sequence(g, sequence);
    r.parameters["sequence"] = format_sequence(s);
    const CountVector counts = count_all(s);
    r.result["length"] = s.length();
    if (opts.g) {
      const Element e = parse_element(g, *opts.g);
      r.parameters["g"] = format_element(g, e);
      r.result["g"] = format_element(g, e);
      r.result["count"] = counts.at(e).str();
    } else {
      Json values = Json::object();
      for (std::size_t i = 0; i < g.order(); ++i) {
        values[format_index(g, i)] = counts[i].str();
      }
      r.result["counts"] = std::move(values);
    }
    r.result["total"] = counts.total().str();
    r.result["normalized"] = counts.total() == pow2(static_cast<std::int64_t>(s.length()));
    try {
      const DavenportOracle oracle(opts.davenport_cap);
      const std::int64_t d = oracle.value(g);
      r.result["davenport"] = d;
      if (static_cast<std::int64_t>(s.length()) >= d - 1) {
        const ExtremalSet e = extremal_set(counts, d);
        r.result["bound"] = bound_text(e.bound_exponent);
        r.result["extremal_set"] = index_list(g, e.members);
      } else {
        r.result["extremal_set"] = nullptr;
        r.result["extremal_note"] = "E(S) is defined only for |S| >= D(G) - 1";
      }
    } catch (const CapExceeded& e) {
      r.result["extremal_set"] = nullptr;
      r.result["extremal_note"] = e.what();
    }
  });
}

Report cmd_davenport(std::string_view spec, const CommandOptions& opts) {
  return run("davenport", spec, opts, [&](Report& r) {
    const Group g = load_group(r, spec);
    const DavenportMethod method = parse_davenport_method(opts.method);
    r.parameters["method"] = to_string(method);
    const std::optional<std::int64_t> formula = davenport_formula(g);
    if (method == DavenportMethod::formula) {
      const DavenportResult res = davenport(g, method, opts.davenport_cap);
      r.result["value"] = res.value;
      r.result["method"] = to_string(res.method);
      r.result["witness"] = format_sequence(res.witness);
      return;
    }
    const DavenportResult exact = davenport_exact(g, opts.davenport_cap);
    r.result["value"] = exact.value;
    r.result["method"] = to_string(method);
    r.result["exact"] = exact.value;
    r.result["witness"] = format_sequence(exact.witness);
    if (method == DavenportMethod::both) {
      if (formula) {
        r.result["formula"] = *formula;
        r.result["agree"] = *formula == exact.value;
        if (*formula != exact.value) r.status = Status::fail;
      } else {
        r.result["formula"] = nullptr;
        r.result["note"] = "no closed formula for this group; exact search only";
      }
    }
  });
}

Report cmd_extremal(std::string_view spec, const CommandOptions& opts) {
  return run("extremal", spec, opts, [&](Report& r) {
    const Group g = load_group(r, spec);
    const DavenportOracle oracle(opts.davenport_cap);
    const std::int64_t d = oracle.value(g);
    if (opts.trials > 0) {
      const std::int64_t len = opts.length.value_or(opts.max_len.value_or(d));
      r.parameters["mode"] = "random";
      r.parameters["length"] = len;
      r.parameters["trials"] = opts.trials;
      r.parameters["seed"] = opts.seed;
      r.result = catalog_json(random_search(g, d, len, opts.trials, opts.seed));
      return;
    }
    const std::int64_t cap = opts.max_len.value_or(d + 2);
    r.parameters["mode"] = "exhaustive";
    r.parameters["max_len"] = cap;
    const ExtremalCatalog c = find_extremals(g, d, cap, opts.budget);
    r.result = catalog_json(c);
    if (!c.exhaustive) r.status = Status::partial;
  });
}

Report cmd_verify(std::string_view theorem, std::string_view spec,
                  const CommandOptions& opts) {
  return run("verify", spec, opts, [&](Report& r) {
    r.parameters["theorem"] = std::string(theorem);
    if (theorem == "cn") {
      const std::int64_t n = require(opts.n, "n");
      const std::int64_t max_len = opts.max_len.value_or(n + 2);
      r.group = "C" + std::to_string(n);
      r.parameters["n"] = n;
      r.parameters["max_len"] = max_len;
      attach(r, check_cyclic_characterization(n, max_len));
      return;
    }
    static const char* const kTheorems[] = {
        "lower-bound", "transform",     "one-and-all", "es-chain",    "subgroup-es",
        "odd-structure", "corollary", "equivalences"};
    bool known = false;
    for (const char* t : kTheorems) known = known || theorem == t;
    if (!known) throw InvalidArgument("unknown theorem id '" + std::string(theorem) + "'");
    if (spec.empty()) throw InvalidArgument("a group is required");
    const Group g = load_group(r, spec);
    const DavenportOracle oracle(opts.davenport_cap);
    if (opts.seq) {
      const Sequence s = parse_sequence(g, *opts.seq);
      r.parameters["sequence"] = format_sequence(s);
      attach(r, verify_single(theorem, g, s, oracle, opts, r));
      return;
    }
    SweepOptions sweep;
    sweep.max_len = opts.max_len.value_or(-1);
    sweep.budget = opts.budget;
    sweep.subgroup_cap = opts.subgroup_cap;
    sweep.seed = opts.seed;
    sweep.trials = opts.trials;
    if (opts.k) sweep.family_k = *opts.k;
    if (opts.max_len) r.parameters["max_len"] = *opts.max_len;
    VerificationReport v;
    if (theorem == "lower-bound") {
      v = sweep_lower_bound(g, oracle, sweep);
    } else if (theorem == "one-and-all") {
      v = sweep_one_and_all(g, oracle, sweep);
    } else if (theorem == "transform") {
      if (opts.trials > 0) {
        const std::int64_t len = opts.max_len.value_or(8);
        r.parameters["trials"] = opts.trials;
        r.parameters["seed"] = opts.seed;
        v = sweep_transform_random(g, len, opts.trials, opts.seed);
      } else {
        v = sweep_transform(g, sweep);
      }
    } else if (theorem == "es-chain") {
      v = sweep_es_chain(g, oracle, sweep);
    } else if (theorem == "subgroup-es") {
      v = sweep_subgroup_es(g, oracle, sweep);
    } else if (theorem == "odd-structure") {
      v = sweep_odd_structure(g, oracle, sweep);
    } else if (theorem == "corollary") {
      v = sweep_corollary(g, oracle, sweep);
    } else {
      v = sweep_equivalences(g, oracle, sweep);
    }
    attach(r, v);
  });
}

Report cmd_conjecture(std::int64_t id, std::string_view spec,
                      const CommandOptions& opts) {
  return run("conjecture", spec, opts, [&](Report& r) {
    r.parameters["id"] = id;
    if (id != 1 && id != 2) throw InvalidArgument("conjecture id must be 1 or 2");
    const Group g = load_group(r, spec);
    const DavenportOracle oracle(opts.davenport_cap);
    if (id == 1) {
      const std::int64_t cap = opts.max_len.value_or(oracle.value(g) + 3);
      r.parameters["max_len"] = cap;
      attach(r, conjecture1_harness(g, oracle, cap, opts.budget));
    } else {
      const std::int64_t cap =
          opts.max_len.value_or(d_star(g) + static_cast<std::int64_t>(g.rank()) + 1);
      r.parameters["max_len"] = cap;
      attach(r, conjecture2_harness(g, oracle, cap, opts.budget, opts.subgroup_cap));
    }
  });
}

Report cmd_construct(std::string_view kind, std::string_view spec,
                     const CommandOptions& opts) {
  return run("construct", spec, opts, [&](Report& r) {
    r.parameters["kind"] = std::string(kind);
    const Group g = load_group(r, spec);
    const DavenportOracle oracle(opts.davenport_cap);
    const std::int64_t d = oracle.value(g);
    r.result["davenport"] = d;
    if (kind == "extremal") {
      const Element target = parse_element(g, opts.g.value_or("0"));
      const std::int64_t m = opts.m.value_or(d - 1);
      r.parameters["g"] = format_element(g, target);
      r.parameters["m"] = m;
      const Sequence s = construct_extremal(g, g.index_of(target), m, d, opts.davenport_cap);
      r.result["sequence"] = format_sequence(s);
      r.result["length"] = s.length();
      r.result["count"] = count_all(s).at(target).str();
      r.result["bound"] = bound_text(m - d + 1);
      return;
    }
    if (kind != "family") {
      throw InvalidArgument("construct kind must be 'extremal' or 'family'");
    }
    Subgroup h;
    if (opts.h) {
      const Element e = parse_element(g, *opts.h);
      if (elem_order(g, e) != 2) throw InvalidArgument("h must have order 2");
      const Element gens[] = {e};
      h = subgroup_closure(g, gens);
    } else {
      const ConditionProfile p = condition_profile(g, oracle);
      if (p.cond_iii) {
        throw PreconditionError("every order-2 subgroup H has D(G) >= D(G/H) + 2");
      }
      h = *p.offending_h;
    }
    const std::int64_t k = opts.k.value_or(1);
    const std::size_t hi = h.members.back();
    r.parameters["h"] = format_index(g, hi);
    r.parameters["k"] = k;
    const Sequence s = construct_unbounded_family(g, h, k, oracle);
    const CountVector counts = count_all(s);
    r.result["sequence"] = format_sequence(s);
    r.result["length"] = s.length();
    r.result["N_0"] = counts[0].str();
    r.result["N_h"] = counts[hi].str();
    r.result["bound"] = bound_text(static_cast<std::int64_t>(s.length()) - d + 1);
  });
}

}  // namespace zerosum
