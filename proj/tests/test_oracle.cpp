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

#include "lazyheur/error.hpp"
#include "lazyheur/oracle.hpp"
#include "support.hpp"

using namespace lazyheur;
using namespace testsupport;

TEST_CASE("even negative cycle") {
  AnswerSets expected = {{"a"}, {"b"}};
  CHECK(oracle_all(load("a :- not b. b :- not a.")) == expected);
}

TEST_CASE("facts and positive loops") {
  CHECK(oracle_all(load("a. b :- a.")) == AnswerSets{{"a", "b"}});
  CHECK(oracle_all(load("a :- b. b :- a.")) == AnswerSets{{}});
  CHECK(oracle_all(load("a :- not a.")).empty());
}

TEST_CASE("choice with a constraint") {
  CHECK(oracle_all(load(corpus("even_sum.lp"))).size() == 16);
  CHECK(oracle_all(load(corpus("two_stable.lp"))) == AnswerSets{{"b"}, {"c"}});
}

TEST_CASE("candidate checks") {
  auto o = OracleProgram::from_program(load("a :- not b. b :- not a. c :- a."));
  CHECK(o.is_answer_set(std::set<std::string>{"a", "c"}));
  CHECK(o.is_answer_set(std::set<std::string>{"b"}));
  CHECK_FALSE(o.is_answer_set(std::set<std::string>{"a"}));
  CHECK_FALSE(o.is_answer_set(std::set<std::string>{"a", "b"}));
  CHECK_FALSE(o.is_answer_set(std::set<std::string>{"b", "c"}));
}

TEST_CASE("aggregates") {
  auto sets = oracle_all(load("{a; b}. c :- 2 <= #count{ 1 : a; 2 : b }."));
  CHECK(sets.size() == 4);
  CHECK(sets.count({"a", "b", "c"}) == 1);
  // self-supporting aggregates are not answer sets
  CHECK(oracle_all(load("p :- 1 <= #count{ 1 : p }.")) == AnswerSets{{}});
}

TEST_CASE("reduct and minimality checks agree without aggregates") {
  for (const auto& text : small_programs()) {
    auto o = OracleProgram::from_program(load(text));
    if (o.has_aggregates() || o.atoms().size() > 12) continue;
    CAPTURE(text);
    std::size_t n = o.atoms().size();
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      OracleProgram::Model m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = (bits >> i) & 1;
      CHECK(o.is_answer_set(m) == o.is_answer_set_gl(m));
    }
  }
}

TEST_CASE("size limits") {
  OracleOptions opts;
  opts.max_atoms = 3;
  CHECK_THROWS_AS(enumerate_answer_sets(load("{a; b; c; d}."), opts), Error);
  try {
    enumerate_answer_sets(load("{a; b; c; d}."), opts);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}
