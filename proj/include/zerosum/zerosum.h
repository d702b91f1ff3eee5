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

#ifndef ZEROSUM_ZEROSUM_H_
#define ZEROSUM_ZEROSUM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ZEROSUM_BUILDING_LIBRARY)
#define ZS_API __attribute__((visibility("default")))
#else
#define ZS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct zs_group zs_group;
typedef struct zs_sequence zs_sequence;
typedef struct zs_counts zs_counts;
typedef struct zs_report zs_report;

typedef enum zs_status {
  ZS_OK = 0,
  ZS_ERR_PARSE = 1,
  ZS_ERR_INVALID_ARGUMENT = 2,
  ZS_ERR_CAP_EXCEEDED = 3,
  ZS_ERR_PRECONDITION = 4,
  ZS_ERR_INTERNAL = 5
} zs_status;

typedef enum zs_report_status {
  ZS_REPORT_PASS = 0,
  ZS_REPORT_FAIL = 1,
  ZS_REPORT_PARTIAL = 2,
  ZS_REPORT_ERROR = 3
} zs_report_status;

/* Unset optional integers are negative; unset strings are NULL. */
typedef struct zs_options {
  int no_timestamp;
  uint64_t budget;
  int64_t max_len;
  uint64_t davenport_cap;
  uint64_t subgroup_cap;
  uint64_t seed;
  uint64_t trials;
  int64_t n;
  int64_t k;
  int64_t m;
  int64_t length;
  const char* g;
  const char* h;
  const char* seq;
  const char* t;
  const char* method;
} zs_options;

ZS_API const char* zs_version(void);

/* Message of the most recent failure on this thread, or "". */
ZS_API const char* zs_last_error(void);

ZS_API void zs_options_init(zs_options* opts);

ZS_API zs_status zs_group_parse(const char* spec, zs_group** out);
ZS_API void zs_group_free(zs_group* g);
ZS_API uint64_t zs_group_order(const zs_group* g);
ZS_API size_t zs_group_rank(const zs_group* g);
ZS_API int64_t zs_group_invariant(const zs_group* g, size_t i);
/* Canonical spec; owned by the handle. */
ZS_API const char* zs_group_spec(const zs_group* g);

ZS_API zs_status zs_sequence_parse(const zs_group* g, const char* text,
                                   zs_sequence** out);
ZS_API void zs_sequence_free(zs_sequence* s);
ZS_API size_t zs_sequence_length(const zs_sequence* s);
ZS_API const char* zs_sequence_text(const zs_sequence* s);

ZS_API zs_status zs_counts_compute(const zs_sequence* s, zs_counts** out);
ZS_API void zs_counts_free(zs_counts* c);
ZS_API size_t zs_counts_size(const zs_counts* c);
/* Decimal text of N_g for the element with index i; owned by the handle. */
ZS_API const char* zs_counts_value(const zs_counts* c, size_t i);
ZS_API const char* zs_counts_element(const zs_counts* c, size_t i);

ZS_API zs_status zs_davenport(const zs_group* g, const char* method,
                              uint64_t cap, int64_t* out);

ZS_API zs_status zs_cmd_group_info(const char* spec, const zs_options* opts,
                                   zs_report** out);
ZS_API zs_status zs_cmd_count(const char* spec, const char* sequence,
                              const zs_options* opts, zs_report** out);
ZS_API zs_status zs_cmd_davenport(const char* spec, const zs_options* opts,
                                  zs_report** out);
ZS_API zs_status zs_cmd_extremal(const char* spec, const zs_options* opts,
                                 zs_report** out);
ZS_API zs_status zs_cmd_verify(const char* theorem, const char* spec,
                               const zs_options* opts, zs_report** out);
ZS_API zs_status zs_cmd_conjecture(int64_t id, const char* spec,
                                   const zs_options* opts, zs_report** out);
ZS_API zs_status zs_cmd_construct(const char* kind, const char* spec,
                                  const zs_options* opts, zs_report** out);

ZS_API zs_report_status zs_report_status_of(const zs_report* r);
/* Owned by the handle; valid until zs_report_free. */
ZS_API const char* zs_report_json(zs_report* r, int pretty);
ZS_API const char* zs_report_text(zs_report* r);
ZS_API int zs_report_exit_code(const zs_report* r);
ZS_API void zs_report_free(zs_report* r);

#ifdef __cplusplus
}
#endif

#endif  /* ZEROSUM_ZEROSUM_H_ */
