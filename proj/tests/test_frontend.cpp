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
#include "lazyheur/normalize.hpp"
#include "lazyheur/parser.hpp"

using namespace lazyheur;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    normalize(parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for: " << text);
  return ErrorCode::Io;
}

std::string normalized(const std::string& text) { return to_string(normalize(parse(text))); }

}  // namespace

TEST_CASE("parser reads rules, constraints and facts") {
  Program p = parse("a(1). b(X) :- a(X), not c(X). :- b(2).");
  REQUIRE(p.rules.size() == 3);
  CHECK(p.rules[0].is_fact());
  CHECK(p.rules[1].head.pred == "b");
  CHECK(p.rules[1].body.size() == 2);
  CHECK(p.rules[1].body[1].negated);
  CHECK(p.rules[2].is_constraint());
}

TEST_CASE("parser accepts mathematical notation") {
  CHECK(parse("a ← not b, 1 ≤ 2, 3 ≥ 1, 4 ≠ 5, x(−1).") ==
        parse("a :- not b, 1 <= 2, 3 >= 1, 4 != 5, x(-1)."));
}

TEST_CASE("comments and primed identifiers") {
  Program p = parse("% comment\np(I') :- q(I'). % trailing\n");
  REQUIRE(p.rules.size() == 1);
  CHECK(to_string(p.rules[0]) == "p(I') :- q(I').");
}

TEST_CASE("printing round-trips through the parser") {
  for (const char* text : {
           "a(1..3). { b(X) : a(X) } :- c.",
           "h :- x(X), 2 <= #sum { S,I : in(I,X), s(I,S) }, X != 3*2, not y(X-1).",
           "#heuristic -a(X) : x(X), +b(X), not -c(X), X > 1. [X+1@2]",
           "p :- q, 2 <= #count { X : r(X) }. x(-3). y(7\\3).",
           "#heuristic in(I,B) : item(I), bin(B), not in(I,_).",
       }) {
    CAPTURE(text);
    Program p = parse(text);
    CHECK(parse(to_string(p)) == p);
  }
}

TEST_CASE("aggregate relations are turned into lower bounds") {
  CHECK(normalized("a :- #sum{X : b(X)} >= 2.") == "a :- 2 <= #sum { X : b(X) }.\n");
  CHECK(normalized("a :- 2 < #count{X : b(X)}.") == "a :- 2+1 <= #count { X : b(X) }.\n");
  CHECK(normalized("a :- #count{X : b(X)} > 1.") == "a :- 1+1 <= #count { X : b(X) }.\n");
}

TEST_CASE("directive defaults and options") {
  Program p = parse("#heuristic a : b. #heuristic -c : d. [3] #heuristic +e : f. [1@2]");
  REQUIRE(p.directives.size() == 3);
  CHECK(p.directives[0].weight == Term::integer(0));
  CHECK(p.directives[0].level == Term::integer(0));
  CHECK(p.directives[1].head.sign == Sign::Neg);
  CHECK(p.directives[1].weight == Term::integer(3));
  CHECK(p.directives[2].head.sign == Sign::Pos);
  CHECK(p.directives[2].level == Term::integer(2));
}

TEST_CASE("directive condition parts") {
  Program p = parse("#heuristic a(X) : x(X), -b(X), not +c(X), not d, X < 3. [X]");
  const auto& d = p.directives.at(0);
  REQUIRE(d.pos.size() == 2);
  CHECK(d.pos[1].sign == Sign::Neg);
  REQUIRE(d.neg.size() == 2);
  CHECK(d.neg[0].sign == Sign::Pos);
  CHECK(d.builtins.size() == 1);
}

TEST_CASE("error codes") {
  CHECK(code_of("a :- b, c") == ErrorCode::Syntax);
  CHECK(code_of("a :- 1 { b }.") == ErrorCode::Syntax);
  CHECK(code_of("_co_a.") == ErrorCode::Syntax);
  CHECK(code_of("{a} 1.") == ErrorCode::UnsupportedBounds);
  CHECK(code_of("a :- #count{X : b(X)} = 2.") == ErrorCode::UnsupportedBounds);
  CHECK(code_of("p(f(1)).") == ErrorCode::Unsupported);
  CHECK(code_of("a :- #max{X : b(X)} >= 2.") == ErrorCode::Unsupported);
  CHECK(code_of("#heuristic a : 1 <= #count{X: b(X)}.") == ErrorCode::Unsupported);
  CHECK(code_of("a :- b(X+1).") == ErrorCode::Unsupported);
  CHECK(code_of("a(X) :- not b(X).") == ErrorCode::Unsafe);
  CHECK(code_of("a :- X < 3.") == ErrorCode::Unsafe);
  CHECK(code_of("a(_).") == ErrorCode::Unsafe);
  CHECK(code_of("a :- not b(_).") == ErrorCode::Unsafe);
  CHECK(code_of("#heuristic a(X) : not b(X).") == ErrorCode::Unsafe);
  CHECK(code_of("#heuristic a : b(X). [X@Y]") == ErrorCode::Unsafe);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse("a.\nb :- .");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("2:", 0) == 0);
  }
}

TEST_CASE("normalize expands interval facts and evaluates ground arithmetic") {
  CHECK(normalized("bin(1..3). y(7\\3). z(2*3+1).") ==
        "bin(1).\nbin(2).\nbin(3).\ny(1).\nz(7).\n");
}

TEST_CASE("empty intervals produce a warning") {
  Program p = normalize(parse("a(1..0)."));
  CHECK(p.rules.empty());
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("E_BAD_INTERVAL") != std::string::npos);
}

TEST_CASE("choice rules become complement pairs") {
  CHECK(normalized("{ b(X) : a(X) } :- c.") ==
        "b(X) :- c, a(X), not _co_b(X).\n_co_b(X) :- c, a(X), not b(X).\n");
  CHECK(normalized("{ a; b }.") ==
        "a :- not _co_a.\n_co_a :- not a.\nb :- not _co_b.\n_co_b :- not b.\n");
}

TEST_CASE("normalize is idempotent") {
  for (const char* text : {"a(1..3). { b(X) : a(X) } :- c.", "x(1..2). {a(X) : x(X)}.",
                           "#heuristic a(X) : x(X). [X] x(1)."}) {
    Program once = normalize(parse(text));
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("complement predicates are internal") {
  CHECK(complement_pred("a") == "_co_a");
  CHECK(is_internal_pred("_co_a"));
  CHECK_FALSE(is_internal_pred("a"));
}

TEST_CASE("directives compile to heuristic rules") {
  Program p = normalize(parse("#heuristic b(X) : x(X), not a(X). [X@2]"));
  HeuristicRule r = directive_to_heuristic_rule(p.directives.at(0));
  CHECK(to_string(r) == "_h(b(X), X, 2, true) :- x(X), not a(X).");
  CHECK(r.sign);
  REQUIRE(r.grounding_key().size() == 1);
  CHECK(to_string(r.grounding_key()[0]) == "x(X)");

  Program q = parse("#heuristic -a(5) : a(4). [2]");
  CHECK(to_string(directive_to_heuristic_rule(q.directives.at(0))) ==
        "_h(a(5), 2, 0, false) :- a(4).");
}
