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

#include "lazyheur/lazyheur.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "lazyheur/bpp.hpp"
#include "lazyheur/error.hpp"
#include "lazyheur/grounder.hpp"
#include "lazyheur/normalize.hpp"
#include "lazyheur/oracle.hpp"
#include "lazyheur/parser.hpp"
#include "lazyheur/solver.hpp"

struct lzh_program {
  lazyheur::Program normalized;
};

namespace {

thread_local std::string g_last_error;

lzh_status code_of(lazyheur::ErrorCode c) {
  using lazyheur::ErrorCode;
  switch (c) {
    case ErrorCode::Syntax: return LZH_E_SYNTAX;
    case ErrorCode::Unsupported: return LZH_E_UNSUPPORTED;
    case ErrorCode::UnsupportedBounds: return LZH_E_UNSUPPORTED_BOUNDS;
    case ErrorCode::Unsafe: return LZH_E_UNSAFE;
    case ErrorCode::Eval: return LZH_E_EVAL;
    case ErrorCode::TooLarge: return LZH_E_TOO_LARGE;
    case ErrorCode::Args: return LZH_E_ARGS;
    case ErrorCode::Io: return LZH_E_IO;
  }
  return LZH_E_INTERNAL;
}

// Runs `f`, translating exceptions into status codes and the thread-local message.
template <typename F>
lzh_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return LZH_OK;
  } catch (const lazyheur::Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LZH_E_TOO_LARGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LZH_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

lzh_status bad_args(const char* what) {
  g_last_error = what;
  return LZH_E_ARGS;
}

int deliver(lzh_model_fn fn, void* user, const std::vector<std::string>& atoms) {
  if (!fn) return 1;
  std::vector<const char*> ptrs;
  ptrs.reserve(atoms.size());
  for (const auto& a : atoms) ptrs.push_back(a.c_str());
  return fn(user, ptrs.data(), ptrs.size());
}

}  // namespace

extern "C" {

const char* lzh_version(void) { return "0.1.0"; }

const char* lzh_status_name(lzh_status status) {
  switch (status) {
    case LZH_OK: return "OK";
    case LZH_E_SYNTAX: return "E_SYNTAX";
    case LZH_E_UNSUPPORTED: return "E_UNSUPPORTED";
    case LZH_E_UNSUPPORTED_BOUNDS: return "E_UNSUPPORTED_BOUNDS";
    case LZH_E_UNSAFE: return "E_UNSAFE";
    case LZH_E_EVAL: return "E_EVAL";
    case LZH_E_TOO_LARGE: return "E_TOO_LARGE";
    case LZH_E_ARGS: return "E_ARGS";
    case LZH_E_IO: return "E_IO";
    case LZH_E_INTERNAL: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

const char* lzh_last_error(void) { return g_last_error.c_str(); }

void lzh_string_free(char* s) { std::free(s); }

lzh_status lzh_program_parse(const char* text, lzh_program** out) {
  if (!text || !out) return bad_args("lzh_program_parse: null argument");
  *out = nullptr;
  return guarded([&] {
    auto p = std::make_unique<lzh_program>();
    p->normalized = lazyheur::normalize(lazyheur::parse(text));
    *out = p.release();
  });
}

void lzh_program_free(lzh_program* program) { delete program; }

size_t lzh_program_warning_count(const lzh_program* program) {
  return program ? program->normalized.warnings.size() : 0;
}

const char* lzh_program_warning(const lzh_program* program, size_t index) {
  if (!program || index >= program->normalized.warnings.size()) return nullptr;
  return program->normalized.warnings[index].c_str();
}

lzh_status lzh_program_print(const lzh_program* program, char** out) {
  if (!program || !out) return bad_args("lzh_program_print: null argument");
  return guarded([&] {
    std::string s = lazyheur::to_string(program->normalized);
    for (const auto& d : program->normalized.directives)
      s += lazyheur::to_string(lazyheur::directive_to_heuristic_rule(d)) + "\n";
    *out = dup(s);
  });
}

lzh_status lzh_ground(const lzh_program* program, size_t cap, char** out) {
  if (!program || !out) return bad_args("lzh_ground: null argument");
  return guarded([&] {
    lazyheur::FullGrounding fg(program->normalized, lazyheur::GrounderOptions{cap ? cap : 1000000});
    std::string s;
    for (const auto& r : fg.grounder().rules()) s += fg.grounder().rule_text(r) + "\n";
    *out = dup(s);
  });
}

void lzh_solve_options_init(lzh_solve_options* options) {
  if (!options) return;
  options->models = 1;
  options->heuristics = 1;
  options->use_seed = 0;
  options->seed = 0;
  options->cap = 1000000;
  options->time_limit = 0;
}

lzh_status lzh_solve(const lzh_program* program, const lzh_solve_options* options,
                     const lzh_callbacks* callbacks, lzh_solve_stats* stats) {
  if (!program) return bad_args("lzh_solve: null program");
  lzh_solve_options o;
  lzh_solve_options_init(&o);
  if (options) o = *options;
  lzh_callbacks cb{};
  if (callbacks) cb = *callbacks;
  return guarded([&] {
    lazyheur::SolveOptions so;
    so.models = o.models;
    so.heuristics = o.heuristics != 0;
    if (o.use_seed) so.seed = o.seed;
    so.cap = o.cap ? o.cap : 1000000;
    so.time_limit = o.time_limit;
    lazyheur::TraceCallback trace;
    if (cb.on_trace)
      trace = [&](std::string_view line) { cb.on_trace(cb.user, std::string(line).c_str()); };
    auto res = lazyheur::solve(
        program->normalized, so,
        [&](const std::vector<std::string>& atoms) { return deliver(cb.on_model, cb.user, atoms) != 0; },
        trace);
    if (cb.on_warning)
      for (const auto& w : res.warnings) cb.on_warning(cb.user, w.c_str());
    if (stats) {
      stats->decisions = res.stats.decisions;
      stats->heuristic_decisions = res.stats.heuristic_decisions;
      stats->backtracks = res.stats.backtracks;
      stats->ground_rules = res.stats.ground_rules;
      stats->ground_directives = res.stats.ground_directives;
      stats->wall_time = res.stats.wall_time;
      stats->models = res.models;
      stats->exhausted = res.exhausted;
      stats->timed_out = res.timed_out;
    }
  });
}

lzh_status lzh_oracle(const lzh_program* program, size_t max_atoms, size_t cap,
                      lzh_model_fn on_model, void* user, size_t* count) {
  if (!program) return bad_args("lzh_oracle: null program");
  return guarded([&] {
    lazyheur::OracleOptions oo;
    if (max_atoms) oo.max_atoms = max_atoms;
    if (cap) oo.cap = cap;
    auto sets = lazyheur::enumerate_answer_sets(program->normalized, oo);
    if (count) *count = sets.size();
    for (const auto& s : sets)
      if (!deliver(on_model, user, s)) break;
  });
}

lzh_status lzh_gen_bpp(size_t items, int64_t cap, size_t bins, uint64_t seed, char** out) {
  if (!out) return bad_args("lzh_gen_bpp: null argument");
  return guarded([&] { *out = dup(lazyheur::gen_bpp(items, cap, bins, seed)); });
}

}  // extern "C"
