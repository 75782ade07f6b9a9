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

#include <doctest.h>

#include <string>
#include <vector>

#include "lazyheur/lazyheur.h"

namespace {

struct Collected {
  std::vector<std::string> models;
  std::vector<std::string> trace;
  std::vector<std::string> warnings;
};

int collect_model(void* user, const char* const* atoms, size_t count) {
  std::string s;
  for (size_t i = 0; i < count; ++i) s += (i ? " " : "") + std::string(atoms[i]);
  static_cast<Collected*>(user)->models.push_back(s);
  return 1;
}

void collect_trace(void* user, const char* line) { static_cast<Collected*>(user)->trace.emplace_back(line); }
void collect_warning(void* user, const char* line) { static_cast<Collected*>(user)->warnings.emplace_back(line); }

lzh_program* parse(const char* text) {
  lzh_program* p = nullptr;
  REQUIRE(lzh_program_parse(text, &p) == LZH_OK);
  return p;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(lzh_version()).size() > 0);
  CHECK(std::string(lzh_status_name(LZH_E_SYNTAX)) == "E_SYNTAX");
  CHECK(std::string(lzh_status_name(LZH_OK)) == "OK");
}

TEST_CASE("option defaults") {
  lzh_solve_options o;
  lzh_solve_options_init(&o);
  CHECK(o.models == 1);
  CHECK(o.heuristics != 0);
  CHECK(o.use_seed == 0);
  CHECK(o.cap == 1000000);
  CHECK(o.time_limit == 0.0);
}

TEST_CASE("parse errors report a status and a message") {
  lzh_program* p = nullptr;
  CHECK(lzh_program_parse("a :- b", &p) == LZH_E_SYNTAX);
  CHECK(p == nullptr);
  CHECK(std::string(lzh_last_error()).size() > 0);
  CHECK(lzh_program_parse("p(X) :- not q(X).", &p) == LZH_E_UNSAFE);
  CHECK(lzh_program_parse(nullptr, &p) == LZH_E_ARGS);
}

TEST_CASE("solving through the C interface") {
  lzh_program* p = parse("a :- not b. b :- not a. #heuristic b. [1]");
  lzh_solve_options o;
  lzh_solve_options_init(&o);
  o.models = 0;
  Collected c;
  lzh_callbacks cb{collect_model, collect_trace, collect_warning, &c};
  lzh_solve_stats stats{};
  REQUIRE(lzh_solve(p, &o, &cb, &stats) == LZH_OK);
  CHECK(c.models == std::vector<std::string>{"b", "a"});
  CHECK(stats.models == 2);
  CHECK(stats.exhausted);
  CHECK(stats.heuristic_decisions >= 1);
  REQUIRE_FALSE(c.trace.empty());
  CHECK(c.trace[0].rfind("DECIDE", 0) == 0);
  lzh_program_free(p);
}

TEST_CASE("the model callback can stop the search") {
  lzh_program* p = parse("{a; b; c}.");
  lzh_solve_options o;
  lzh_solve_options_init(&o);
  o.models = 0;
  int calls = 0;
  auto stop = [](void* user, const char* const*, size_t) {
    ++*static_cast<int*>(user);
    return 0;
  };
  lzh_callbacks cb{stop, nullptr, nullptr, &calls};
  lzh_solve_stats stats{};
  CHECK(lzh_solve(p, &o, &cb, &stats) == LZH_OK);
  CHECK(calls == 1);
  lzh_program_free(p);
}

TEST_CASE("oracle, grounding, printing and generation") {
  lzh_program* p = parse("a :- not b. b :- not a.");
  Collected c;
  size_t count = 0;
  REQUIRE(lzh_oracle(p, 24, 1000000, collect_model, &c, &count) == LZH_OK);
  CHECK(count == 2);
  CHECK(c.models.size() == 2);

  char* text = nullptr;
  REQUIRE(lzh_ground(p, 1000000, &text) == LZH_OK);
  CHECK(std::string(text).find("a :- ") != std::string::npos);
  lzh_string_free(text);

  REQUIRE(lzh_program_print(p, &text) == LZH_OK);
  CHECK(std::string(text) == "a :- not b.\nb :- not a.\n");
  lzh_string_free(text);
  lzh_program_free(p);

  REQUIRE(lzh_gen_bpp(1, 1, 1, 0, &text) == LZH_OK);
  CHECK(std::string(text) == "bcap(1).\nbin(1..1).\nitem(1..1).\nsize(1,1).\n");
  lzh_string_free(text);
  CHECK(lzh_gen_bpp(5, 1, 1, 0, &text) == LZH_E_ARGS);
}

TEST_CASE("resource limits map to E_TOO_LARGE") {
  lzh_program* p = parse("{a; b; c; d}.");
  size_t count = 0;
  CHECK(lzh_oracle(p, 2, 1000000, nullptr, nullptr, &count) == LZH_E_TOO_LARGE);
  lzh_solve_options o;
  lzh_solve_options_init(&o);
  o.cap = 1;
  CHECK(lzh_solve(p, &o, nullptr, nullptr) == LZH_E_TOO_LARGE);
  lzh_program_free(p);
}

TEST_CASE("warnings are exposed") {
  lzh_program* p = parse("a. #heuristic a. [1]");
  for (size_t i = 0; i < lzh_program_warning_count(p); ++i) CHECK(lzh_program_warning(p, i) != nullptr);
  CHECK(lzh_program_warning(p, lzh_program_warning_count(p)) == nullptr);
  lzh_program_free(p);
}
