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

#include <random>
#include <set>

#include "lazyheur/heuristics.hpp"
#include "support.hpp"

using namespace lazyheur;

namespace {

const Reason kDecision{Reason::Kind::Decision, 0};

struct Fixture {
  AtomStore store;
  PartialAssignment a;
  AtomId atom(std::int64_t i) {
    Value v = Value::integer(i);
    AtomId id = store.intern(store.pred("a", 1), std::span<const Value>(&v, 1));
    a.ensure_size(store.size());
    return id;
  }
};

GroundDirective directive(std::uint32_t id, AtomId head, std::vector<GroundCond> pos,
                          std::vector<GroundCond> neg, std::int64_t w, std::int64_t l = 0,
                          Sign sign = Sign::Plain) {
  GroundDirective d;
  d.id = id;
  d.head = head;
  d.head_sign = sign;
  d.pos = std::move(pos);
  d.neg = std::move(neg);
  d.weight = w;
  d.level = l;
  return d;
}

}  // namespace

TEST_CASE("literal satisfaction table") {
  using T = Truth;
  // not-l is the complement of l in every state
  for (Sign s : {Sign::Plain, Sign::Pos, Sign::Neg})
    for (T v : {T::Unassigned, T::False, T::Must, T::True})
      CHECK(satisfies_literal(v, s, true) == !satisfies_literal(v, s, false));
  CHECK_FALSE(satisfies_literal(T::Must, Sign::Plain, true));
  CHECK_FALSE(satisfies_literal(T::Must, Sign::Pos, false));
  CHECK(satisfies_literal(T::Unassigned, Sign::Neg, true));
  CHECK(satisfies_literal(T::False, Sign::Neg, false));
  // strong implies plain
  for (T v : {T::Unassigned, T::False, T::Must, T::True}) {
    if (satisfies_literal(v, Sign::Pos, false)) CHECK(satisfies_literal(v, Sign::Plain, false));
    if (satisfies_literal(v, Sign::Neg, false)) CHECK_FALSE(satisfies_literal(v, Sign::Plain, false));
  }
}

TEST_CASE("conditions and applicability of the four directives") {
  Fixture f;
  AtomId a4 = f.atom(4), a5 = f.atom(5), a6 = f.atom(6);
  auto d4 = directive(0, a5, {}, {}, 1);
  auto d5 = directive(1, a4, {}, {{Sign::Plain, a5}}, 2);
  auto d6 = directive(2, a5, {{Sign::Plain, a4}}, {}, 2, 0, Sign::Neg);
  auto d7 = directive(3, a6, {{Sign::Neg, a5}, {Sign::Pos, a4}}, {}, 2);

  CHECK(is_applicable(f.a, f.store, d4));
  CHECK(is_applicable(f.a, f.store, d5));
  CHECK_FALSE(is_applicable(f.a, f.store, d6));
  CHECK_FALSE(is_applicable(f.a, f.store, d7));

  f.a.assign(a4, Truth::True, kDecision);
  CHECK(condition_satisfied(f.a, f.store, d6));
  CHECK(is_applicable(f.a, f.store, d6));

  f.a.assign(a5, Truth::False, kDecision);
  CHECK(condition_satisfied(f.a, f.store, d5));
  CHECK_FALSE(is_applicable(f.a, f.store, d5));  // head already assigned
  CHECK_FALSE(is_applicable(f.a, f.store, d4));
  CHECK(is_applicable(f.a, f.store, d7));
}

TEST_CASE("a head at must-be-true stays applicable") {
  Fixture f;
  AtomId h = f.atom(1);
  auto d = directive(0, h, {}, {}, 0);
  f.a.assign(h, Truth::Must, kDecision);
  CHECK(is_applicable(f.a, f.store, d));
  f.a.assign(h, Truth::True, kDecision);
  CHECK_FALSE(is_applicable(f.a, f.store, d));
}

TEST_CASE("the two condition formulations agree on random states") {
  std::mt19937 rng(3);
  Fixture f;
  std::vector<AtomId> atoms;
  for (int i = 0; i < 6; ++i) atoms.push_back(f.atom(i));
  PredId pred = f.store.pred("a", 1);
  for (int round = 0; round < 500; ++round) {
    PartialAssignment a;
    a.ensure_size(f.store.size());
    for (AtomId x : atoms)
      if (rng() % 4) a.assign(x, static_cast<Truth>(1 + rng() % 3), kDecision);
    GroundDirective d;
    d.head = atoms[0];
    for (int i = 0, n = rng() % 3; i < n; ++i)
      d.pos.push_back({static_cast<Sign>(rng() % 3), atoms[rng() % 6]});
    for (int i = 0, n = rng() % 3; i < n; ++i)
      d.neg.push_back({static_cast<Sign>(rng() % 3), atoms[rng() % 6]});
    if (rng() % 3 == 0) d.neg_patterns.push_back({static_cast<Sign>(rng() % 3), pred, {std::nullopt}});
    CHECK(condition_satisfied(a, f.store, d) == condition_satisfied(a.project(), f.store, d));
  }
}

TEST_CASE("wildcard patterns in negative conditions") {
  AtomStore store;
  PartialAssignment a;
  PredId in = store.pred("in", 2);
  auto mk = [&](int i, int b) {
    std::vector<Value> args = {Value::integer(i), Value::integer(b)};
    return store.intern(in, args);
  };
  AtomId in11 = mk(1, 1), in12 = mk(1, 2), in21 = mk(2, 1);
  a.ensure_size(store.size());
  GroundDirective d;
  d.head = in12;
  d.neg_patterns.push_back({Sign::Plain, in, {Value::integer(1), std::nullopt}});
  CHECK(condition_satisfied(a, store, d));
  a.assign(in21, Truth::True, kDecision);
  CHECK(condition_satisfied(a, store, d));  // different item
  a.assign(in11, Truth::Must, kDecision);
  CHECK_FALSE(condition_satisfied(a, store, d));
}

TEST_CASE("selection follows level, then weight, then id") {
  Fixture f;
  std::vector<GroundDirective> dirs = {
      directive(0, f.atom(0), {}, {}, 1),
      directive(1, f.atom(1), {}, {}, 2),
  };
  HeuristicPool pool;
  for (const auto& d : dirs) pool.add(d);
  CHECK(pool.select(f.a, f.store, dirs) == 1u);

  std::vector<GroundDirective> dirs2 = {
      directive(0, f.atom(2), {}, {}, 9, 0),
      directive(1, f.atom(3), {}, {}, 1, 1),
  };
  HeuristicPool pool2;
  for (const auto& d : dirs2) pool2.add(d);
  CHECK(pool2.select(f.a, f.store, dirs2) == 1u);

  std::vector<GroundDirective> single = {directive(0, f.atom(4), {}, {}, 0)};
  HeuristicPool pool3;
  pool3.add(single[0]);
  CHECK(pool3.select(f.a, f.store, single) == 0u);
}

TEST_CASE("pool skips, stashes and restores directives") {
  Fixture f;
  AtomId h0 = f.atom(0), h1 = f.atom(1);
  std::vector<GroundDirective> dirs = {directive(0, h0, {}, {}, 5), directive(1, h1, {}, {}, 1)};
  HeuristicPool pool;
  for (const auto& d : dirs) pool.add(d);
  CHECK(pool.select(f.a, f.store, dirs, {0}) == 1u);
  CHECK(pool.select(f.a, f.store, dirs) == 0u);

  f.a.new_level();
  f.a.assign(h0, Truth::True, kDecision);
  CHECK(pool.select(f.a, f.store, dirs) == 1u);
  f.a.assign(h1, Truth::False, kDecision);
  CHECK_FALSE(pool.select(f.a, f.store, dirs).has_value());

  f.a.backtrack_to(0);
  pool.on_backtrack(0);
  CHECK(pool.select(f.a, f.store, dirs) == 0u);
}

TEST_CASE("directives that are not yet applicable are rechecked later") {
  Fixture f;
  AtomId c = f.atom(0), h = f.atom(1);
  std::vector<GroundDirective> dirs = {directive(0, h, {{Sign::Pos, c}}, {}, 0)};
  HeuristicPool pool;
  pool.add(dirs[0]);
  CHECK_FALSE(pool.select(f.a, f.store, dirs).has_value());
  f.a.assign(c, Truth::Must, kDecision);
  CHECK_FALSE(pool.select(f.a, f.store, dirs).has_value());
  f.a.assign(c, Truth::True, kDecision);
  CHECK(pool.select(f.a, f.store, dirs) == 0u);
}

TEST_CASE("maxpriority reference") {
  std::vector<Priority> ps = {{0, 9, 0}, {1, 1, 1}, {1, 3, 2}, {1, 3, 3}};
  CHECK(maxpriority(ps) == std::vector<std::uint32_t>{2, 3});
  CHECK(maxpriority({}).empty());
}

TEST_CASE("seeded selection stays within maxpriority") {
  Fixture f;
  std::vector<GroundDirective> dirs;
  for (std::uint32_t i = 0; i < 6; ++i) dirs.push_back(directive(i, f.atom(i), {}, {}, i < 4 ? 3 : 1));
  std::set<std::uint32_t> seen;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    HeuristicPool pool(seed);
    for (const auto& d : dirs) pool.add(d);
    auto pick = pool.select(f.a, f.store, dirs);
    REQUIRE(pick.has_value());
    CHECK(*pick < 4);
    seen.insert(*pick);
  }
  CHECK(seen.size() > 1);
}
