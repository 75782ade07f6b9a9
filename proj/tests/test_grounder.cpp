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

#include <algorithm>

#include "lazyheur/error.hpp"
#include "lazyheur/grounder.hpp"
#include "support.hpp"

using namespace lazyheur;
using testsupport::load;

namespace {

std::vector<std::string> texts(const Grounder& g, const std::vector<std::uint32_t>& ids) {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(g.rule_text(g.rules()[id]));
  return out;
}

AtomId atom(Grounder& g, const std::string& pred, std::vector<Value> args) {
  auto id = g.store().find(g.store().pred(pred, static_cast<std::uint32_t>(args.size())), args);
  REQUIRE(id.has_value());
  return *id;
}

}  // namespace

TEST_CASE("atom store interns atoms once") {
  AtomStore s;
  PredId p = s.pred("p", 2);
  std::vector<Value> a1 = {Value::integer(1), Value::symbol("x")};
  AtomId a = s.intern(p, a1);
  CHECK(s.intern(p, a1) == a);
  CHECK(s.to_string(a) == "p(1,x)");
  CHECK(s.pred("p", 2) == p);
  CHECK(s.pred("p", 1) != p);
  CHECK_FALSE(s.is_internal(a));
  AtomId b = s.new_body_atom();
  CHECK(s.kind(b) == AtomKind::Body);
  CHECK(s.is_internal(b));
}

TEST_CASE("full grounding of the two-stable-bodies example") {
  FullGrounding fg(load(testsupport::corpus("heuristic_rule.lp")));
  const Grounder& g = fg.grounder();
  std::vector<std::string> lines;
  for (const auto& r : g.rules()) lines.push_back(g.rule_text(r));
  const std::vector<std::string> want = {
      "x(1).",
      "x(2).",
      "a(1) :- x(1), not _co_a(1).",
      "_co_a(1) :- x(1), not a(1).",
      "b(1) :- x(1), not c(1).",
      "c(1) :- x(1), not b(1).",
      "_h(b(1), 1, 2, true) :- x(1), not a(1).",
      "a(2) :- x(2), not _co_a(2).",
      "_co_a(2) :- x(2), not a(2).",
      "b(2) :- x(2), not c(2).",
      "c(2) :- x(2), not b(2).",
      "_h(b(2), 2, 2, true) :- x(2), not a(2).",
  };
  CHECK(lines == want);
}

TEST_CASE("rules are emitted only once their positive body is known") {
  Grounder g(load("a(1). b(X) :- a(X). c(X) :- b(X), d(X)."));
  GroundingDelta d0 = g.start();
  CHECK(texts(g, d0.rules) == std::vector<std::string>{"a(1)."});
  AtomId a1 = atom(g, "a", {Value::integer(1)});
  GroundingDelta d1 = g.ground_new(std::vector<AtomId>{a1}, std::vector<AtomId>{a1});
  CHECK(texts(g, d1.rules) == std::vector<std::string>{"b(1) :- a(1)."});
  AtomId b1 = atom(g, "b", {Value::integer(1)});
  GroundingDelta d2 = g.ground_new(std::vector<AtomId>{b1}, std::vector<AtomId>{b1});
  CHECK(d2.rules.empty());  // d(1) is unknown

  // feeding the same atoms again emits nothing
  GroundingDelta again = g.ground_new(std::vector<AtomId>{a1, b1}, std::vector<AtomId>{a1, b1});
  CHECK(again.empty());
}

TEST_CASE("grounding is deterministic") {
  auto run = [] {
    FullGrounding fg(load(testsupport::corpus("bpp_small.lp")));
    std::vector<std::string> out;
    for (const auto& r : fg.grounder().rules())
      out.push_back(std::to_string(r.id) + " " + fg.grounder().rule_text(r));
    return out;
  };
  CHECK(run() == run());
}

TEST_CASE("strongly negative condition atoms wait for an assignment") {
  Grounder g(load("{ a(4); a(5); a(6) }. #heuristic a(6) : -a(5), +a(4). [2]"));
  GroundingDelta d0 = g.start();
  CHECK(d0.directives.empty());
  AtomId a4 = atom(g, "a", {Value::integer(4)});
  AtomId a5 = atom(g, "a", {Value::integer(5)});
  GroundingDelta d1 = g.ground_new(std::vector<AtomId>{a4}, std::vector<AtomId>{a4});
  CHECK(d1.directives.empty());
  // a(5) being assigned (false) is what the -a(5) key needs
  GroundingDelta d2 = g.ground_new(std::vector<AtomId>{}, std::vector<AtomId>{a5});
  REQUIRE(d2.directives.size() == 1);
  const GroundDirective& d = g.directives()[d2.directives[0]];
  CHECK(g.store().to_string(d.head) == "a(6)");
  CHECK(d.weight == 2);
  CHECK(g.directive_text(d) == "_h(a(6), 2, 0, true) :- -a(5), +a(4).");
}

TEST_CASE("anonymous variables in negative conditions become patterns") {
  FullGrounding fg(load("item(1). bin(1). in(I,B) :- item(I), bin(B), not out(I,B). "
                        "out(I,B) :- item(I), bin(B), not in(I,B). "
                        "#heuristic in(I,B) : item(I), bin(B), not in(I,_). [1]"));
  const auto& dirs = fg.grounder().directives();
  REQUIRE(dirs.size() == 1);
  REQUIRE(dirs[0].neg_patterns.size() == 1);
  CHECK_FALSE(dirs[0].neg_patterns[0].args[1].has_value());
  CHECK(fg.grounder().directive_text(dirs[0]) == "_h(in(1,1), 1, 0, true) :- item(1), bin(1), not in(1,_).");
}

TEST_CASE("closedness of atoms") {
  Grounder g(load("q(1). p(X) :- q(X). r :- q(X). s(X) :- q(X), X > 5."));
  GroundingDelta d0 = g.start();
  AtomId q1 = atom(g, "q", {Value::integer(1)});
  CHECK(g.is_closed(q1));
  g.ground_new(std::vector<AtomId>{q1}, std::vector<AtomId>{q1});
  CHECK(g.is_closed(atom(g, "p", {Value::integer(1)})));
  CHECK_FALSE(g.is_closed(atom(g, "r", {})));  // body variable X is not in the head
  // s(1) cannot be derived: the comparison rules the only candidate rule out
  AtomId s1 = g.store().intern(g.store().pred("s", 1), std::vector<Value>{Value::integer(1)});
  CHECK(g.is_closed(s1));
}

TEST_CASE("bodies are shared between rules with equal bodies") {
  FullGrounding fg(load("x. a :- x, not b. c :- x, not b."));
  const Grounder& g = fg.grounder();
  CHECK(g.rules().size() == 3);
  CHECK(g.bodies().size() == 2);
  CHECK(g.rules()[1].body == g.rules()[2].body);
}

TEST_CASE("aggregates produce element atoms, groups and bounds") {
  FullGrounding fg(load("s(1,2). s(2,3). in(1). in(2). ok :- 4 <= #sum{ S,I : in(I), s(I,S) }."));
  const Grounder& g = fg.grounder();
  REQUIRE(g.groups().size() == 1);
  const AggGroup& grp = g.groups()[0];
  CHECK(grp.elements.size() == 2);
  std::int64_t total = 0;
  for (auto [e, w] : grp.elements) total += w;
  CHECK(total == 5);
  REQUIRE(grp.bounds.size() == 1);
  CHECK(grp.bounds[0].first == 4);
  CHECK(g.store().kind(grp.bounds[0].second) == AtomKind::Aggregate);
}

TEST_CASE("grounding errors") {
  CHECK_THROWS_AS(FullGrounding(load("q(1). p(X) :- q(X), X = 1/0.")), Error);
  try {
    FullGrounding(load("q(a). #heuristic p(X) : q(X). [X]"));
    FAIL("expected E_EVAL");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Eval);
  }
  try {
    FullGrounding(load("n(1..50). p(X,Y) :- n(X), n(Y)."), GrounderOptions{100});
    FAIL("expected E_TOO_LARGE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("lazy grounding emits a subset of the full grounding") {
  for (const auto& text : testsupport::small_programs()) {
    Program p = load(text);
    Solver s(p, SolveOptions{.models = 0});
    s.run({});
    FullGrounding full(p);
    std::vector<std::string> lazy, eager;
    for (const auto& r : s.grounder().rules()) lazy.push_back(s.grounder().rule_text(r));
    for (const auto& r : full.grounder().rules()) eager.push_back(full.grounder().rule_text(r));
    std::sort(lazy.begin(), lazy.end());
    std::sort(eager.begin(), eager.end());
    CAPTURE(text);
    CHECK(std::includes(eager.begin(), eager.end(), lazy.begin(), lazy.end()));
  }
}
