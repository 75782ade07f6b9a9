// Copyright 2026 The lazyheur Authors.
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

/* C interface of the lazyheur solver library. */
#ifndef LAZYHEUR_LAZYHEUR_H
#define LAZYHEUR_LAZYHEUR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LAZYHEUR_BUILDING_DLL)
#    define LZH_API __declspec(dllexport)
#  else
#    define LZH_API __declspec(dllimport)
#  endif
#else
#  define LZH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lzh_status {
  LZH_OK = 0,
  LZH_E_SYNTAX = 1,
  LZH_E_UNSUPPORTED = 2,
  LZH_E_UNSUPPORTED_BOUNDS = 3,
  LZH_E_UNSAFE = 4,
  LZH_E_EVAL = 5,
  LZH_E_TOO_LARGE = 6,
  LZH_E_ARGS = 7,
  LZH_E_IO = 8,
  LZH_E_INTERNAL = 9
} lzh_status;

/* Parsed and normalized program (opaque). */
typedef struct lzh_program lzh_program;

LZH_API const char* lzh_version(void);
/* Symbolic name such as "E_SYNTAX". */
LZH_API const char* lzh_status_name(lzh_status status);
/* Message of the last failed call on this thread ("" if none). */
LZH_API const char* lzh_last_error(void);
/* Strings returned through char** out-parameters are released with this. */
LZH_API void lzh_string_free(char* s);

LZH_API lzh_status lzh_program_parse(const char* text, lzh_program** out);
LZH_API void lzh_program_free(lzh_program* program);
LZH_API size_t lzh_program_warning_count(const lzh_program* program);
LZH_API const char* lzh_program_warning(const lzh_program* program, size_t index);
/* Normalized program text: rules, then heuristic rules. */
LZH_API lzh_status lzh_program_print(const lzh_program* program, char** out);

/* Full grounding, one ground rule per line in rule-id order. */
LZH_API lzh_status lzh_ground(const lzh_program* program, size_t cap, char** out);

/* Receives a sorted answer set; return 0 to stop. */
typedef int (*lzh_model_fn)(void* user, const char* const* atoms, size_t count);
typedef void (*lzh_line_fn)(void* user, const char* line);

typedef struct lzh_solve_options {
  size_t models;      /* 0 = all; default 1 */
  int heuristics;     /* non-zero = use directives; default 1 */
  int use_seed;       /* non-zero = random tie-breaking with `seed` */
  uint64_t seed;
  size_t cap;         /* ground rule cap; default 1000000 */
  double time_limit;  /* seconds; 0 = unlimited */
} lzh_solve_options;

typedef struct lzh_callbacks {
  lzh_model_fn on_model; /* may be NULL */
  lzh_line_fn on_trace;  /* DECIDE/ASSIGN lines; NULL disables tracing */
  lzh_line_fn on_warning;
  void* user;
} lzh_callbacks;

typedef struct lzh_solve_stats {
  uint64_t decisions;
  uint64_t heuristic_decisions;
  uint64_t backtracks;
  uint64_t ground_rules;
  uint64_t ground_directives;
  double wall_time; /* seconds */
  size_t models;
  int exhausted;    /* search space fully explored */
  int timed_out;
} lzh_solve_stats;

LZH_API void lzh_solve_options_init(lzh_solve_options* options);
/* `options` and `stats` may be NULL. */
LZH_API lzh_status lzh_solve(const lzh_program* program, const lzh_solve_options* options,
                             const lzh_callbacks* callbacks, lzh_solve_stats* stats);

/* Brute-force enumeration of all answer sets (desk-scale programs only). */
LZH_API lzh_status lzh_oracle(const lzh_program* program, size_t max_atoms, size_t cap,
                              lzh_model_fn on_model, void* user, size_t* count);

/* Facts of a perfectly packable bin-packing instance. */
LZH_API lzh_status lzh_gen_bpp(size_t items, int64_t cap, size_t bins, uint64_t seed,
                               char** out);

#ifdef __cplusplus
}
#endif

#endif /* LAZYHEUR_LAZYHEUR_H */
