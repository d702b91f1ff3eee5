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

#include "zerosum/zerosum.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "zerosum/core/commands.hpp"
#include "zerosum/core/counting.hpp"
#include "zerosum/core/davenport.hpp"
#include "zerosum/core/error.hpp"
#include "zerosum/core/group.hpp"
#include "zerosum/core/report.hpp"
#include "zerosum/core/sequence.hpp"

struct zs_group {
  zerosum::Group group;
  std::string spec;
};

struct zs_sequence {
  zerosum::Sequence sequence;
  std::string text;
};

struct zs_counts {
  std::vector<std::string> values;
  std::vector<std::string> elements;
};

struct zs_report {
  zerosum::Report report;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

zs_status fail(zs_status code, const char* what) {
  last_error = what;
  return code;
}

template <typename Body>
zs_status guard(Body body) {
  try {
    last_error.clear();
    body();
    return ZS_OK;
  } catch (const zerosum::ParseError& e) {
    return fail(ZS_ERR_PARSE, e.what());
  } catch (const zerosum::InvalidArgument& e) {
    return fail(ZS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const zerosum::CapExceeded& e) {
    return fail(ZS_ERR_CAP_EXCEEDED, e.what());
  } catch (const zerosum::PreconditionError& e) {
    return fail(ZS_ERR_PRECONDITION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZS_ERR_INTERNAL, e.what());
  }
}

zs_status null_argument() {
  return fail(ZS_ERR_INVALID_ARGUMENT, "null argument");
}

zerosum::CommandOptions convert(const zs_options* in) {
  zerosum::CommandOptions o;
  if (in == nullptr) return o;
  o.no_timestamp = in->no_timestamp != 0;
  o.budget = in->budget;
  if (in->max_len >= 0) o.max_len = in->max_len;
  o.davenport_cap = static_cast<std::size_t>(in->davenport_cap);
  o.subgroup_cap = static_cast<std::size_t>(in->subgroup_cap);
  o.seed = in->seed;
  o.trials = in->trials;
  if (in->n >= 0) o.n = in->n;
  if (in->k >= 0) o.k = in->k;
  if (in->m >= 0) o.m = in->m;
  if (in->length >= 0) o.length = in->length;
  if (in->g != nullptr) o.g = in->g;
  if (in->h != nullptr) o.h = in->h;
  if (in->seq != nullptr) o.seq = in->seq;
  if (in->t != nullptr) o.t = in->t;
  if (in->method != nullptr) o.method = in->method;
  return o;
}

template <typename Make>
zs_status emit(zs_report** out, Make make) {
  if (out == nullptr) return null_argument();
  *out = nullptr;
  return guard([&] { *out = new zs_report{make(), {}, {}}; });
}

const char* str(const char* s) { return s == nullptr ? "" : s; }

}  // namespace

extern "C" {

const char* zs_version(void) { return ZEROSUM_VERSION; }

const char* zs_last_error(void) { return last_error.c_str(); }

void zs_options_init(zs_options* opts) {
  if (opts == nullptr) return;
  const zerosum::CommandOptions d;
  opts->no_timestamp = 0;
  opts->budget = d.budget;
  opts->max_len = -1;
  opts->davenport_cap = d.davenport_cap;
  opts->subgroup_cap = d.subgroup_cap;
  opts->seed = d.seed;
  opts->trials = d.trials;
  opts->n = -1;
  opts->k = -1;
  opts->m = -1;
  opts->length = -1;
  opts->g = nullptr;
  opts->h = nullptr;
  opts->seq = nullptr;
  opts->t = nullptr;
  opts->method = nullptr;
}

zs_status zs_group_parse(const char* spec, zs_group** out) {
  if (spec == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guard([&] {
    zerosum::Group g = zerosum::parse_group(spec);
    std::string canonical = zerosum::format_group(g);
    *out = new zs_group{std::move(g), std::move(canonical)};
  });
}

void zs_group_free(zs_group* g) { delete g; }

uint64_t zs_group_order(const zs_group* g) { return g == nullptr ? 0 : g->group.order(); }

size_t zs_group_rank(const zs_group* g) { return g == nullptr ? 0 : g->group.rank(); }

int64_t zs_group_invariant(const zs_group* g, size_t i) {
  if (g == nullptr || i >= g->group.rank()) return 0;
  return g->group.invariants()[i];
}

const char* zs_group_spec(const zs_group* g) { return g == nullptr ? "" : g->spec.c_str(); }

zs_status zs_sequence_parse(const zs_group* g, const char* text, zs_sequence** out) {
  if (g == nullptr || text == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guard([&] {
    zerosum::Sequence s = zerosum::parse_sequence(g->group, text);
    std::string canonical = zerosum::format_sequence(s);
    *out = new zs_sequence{std::move(s), std::move(canonical)};
  });
}

void zs_sequence_free(zs_sequence* s) { delete s; }

size_t zs_sequence_length(const zs_sequence* s) {
  return s == nullptr ? 0 : s->sequence.length();
}

const char* zs_sequence_text(const zs_sequence* s) {
  return s == nullptr ? "" : s->text.c_str();
}

zs_status zs_counts_compute(const zs_sequence* s, zs_counts** out) {
  if (s == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guard([&] {
    const zerosum::CountVector counts = zerosum::count_all(s->sequence);
    auto* c = new zs_counts;
    const zerosum::Group& g = s->sequence.group();
    for (std::size_t i = 0; i < g.order(); ++i) {
      c->values.push_back(counts[i].str());
      c->elements.push_back(zerosum::format_index(g, i));
    }
    *out = c;
  });
}

void zs_counts_free(zs_counts* c) { delete c; }

size_t zs_counts_size(const zs_counts* c) { return c == nullptr ? 0 : c->values.size(); }

const char* zs_counts_value(const zs_counts* c, size_t i) {
  if (c == nullptr || i >= c->values.size()) return nullptr;
  return c->values[i].c_str();
}

const char* zs_counts_element(const zs_counts* c, size_t i) {
  if (c == nullptr || i >= c->elements.size()) return nullptr;
  return c->elements[i].c_str();
}

zs_status zs_davenport(const zs_group* g, const char* method, uint64_t cap,
                       int64_t* out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guard([&] {
    const auto m = zerosum::parse_davenport_method(method == nullptr ? "both" : method);
    *out = zerosum::davenport(g->group, m, static_cast<std::size_t>(cap)).value;
  });
}

zs_status zs_cmd_group_info(const char* spec, const zs_options* opts, zs_report** out) {
  return emit(out, [&] { return zerosum::cmd_group_info(str(spec), convert(opts)); });
}

zs_status zs_cmd_count(const char* spec, const char* sequence, const zs_options* opts,
                       zs_report** out) {
  return emit(out, [&] {
    return zerosum::cmd_count(str(spec), str(sequence), convert(opts));
  });
}

zs_status zs_cmd_davenport(const char* spec, const zs_options* opts, zs_report** out) {
  return emit(out, [&] { return zerosum::cmd_davenport(str(spec), convert(opts)); });
}

zs_status zs_cmd_extremal(const char* spec, const zs_options* opts, zs_report** out) {
  return emit(out, [&] { return zerosum::cmd_extremal(str(spec), convert(opts)); });
}

zs_status zs_cmd_verify(const char* theorem, const char* spec, const zs_options* opts,
                        zs_report** out) {
  return emit(out, [&] {
    return zerosum::cmd_verify(str(theorem), str(spec), convert(opts));
  });
}

zs_status zs_cmd_conjecture(int64_t id, const char* spec, const zs_options* opts,
                            zs_report** out) {
  return emit(out, [&] { return zerosum::cmd_conjecture(id, str(spec), convert(opts)); });
}

zs_status zs_cmd_construct(const char* kind, const char* spec, const zs_options* opts,
                           zs_report** out) {
  return emit(out, [&] {
    return zerosum::cmd_construct(str(kind), str(spec), convert(opts));
  });
}

zs_report_status zs_report_status_of(const zs_report* r) {
  if (r == nullptr) return ZS_REPORT_ERROR;
  switch (r->report.status) {
    case zerosum::Status::pass:
      return ZS_REPORT_PASS;
    case zerosum::Status::fail:
      return ZS_REPORT_FAIL;
    case zerosum::Status::partial:
      return ZS_REPORT_PARTIAL;
    case zerosum::Status::error:
      return ZS_REPORT_ERROR;
  }
  return ZS_REPORT_ERROR;
}

const char* zs_report_json(zs_report* r, int pretty) {
  if (r == nullptr) return nullptr;
  r->json = zerosum::to_json(r->report).dump(pretty ? 2 : -1);
  return r->json.c_str();
}

const char* zs_report_text(zs_report* r) {
  if (r == nullptr) return nullptr;
  r->text = zerosum::render_text(r->report);
  return r->text.c_str();
}

int zs_report_exit_code(const zs_report* r) {
  return r == nullptr ? 2 : zerosum::exit_code(r->report.status);
}

void zs_report_free(zs_report* r) { delete r; }

}  // extern "C"
