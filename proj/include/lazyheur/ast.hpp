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

#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

// Non-ground syntax tree of the input language: rules with optional choice
// heads and lower-bounded aggregates, plus `#heuristic` directives.

namespace lazyheur {

struct Term {
  enum class Kind : std::uint8_t { Int, Sym, Var, Anon, BinOp, Neg, Interval };

  Kind kind = Kind::Int;
  std::int64_t num = 0;
  std::string name;  // symbol or variable name
  char op = 0;       // + - * / \ for BinOp
  std::vector<Term> args;

  static Term integer(std::int64_t v);
  static Term symbol(std::string name);
  static Term var(std::string name);
  static Term anon();
  static Term binop(char op, Term lhs, Term rhs);
  static Term negate(Term t);
  static Term interval(Term lo, Term hi);

  bool is_ground() const;
  bool has_interval() const;
  bool has_anon() const;
  bool is_arithmetic() const { return kind == Kind::BinOp || kind == Kind::Neg; }
  /// Named variables only; `_` is never reported.
  void collect_vars(std::set<std::string>& out) const;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Atom {
  std::string pred;
  std::vector<Term> args;

  std::size_t arity() const { return args.size(); }
  bool is_ground() const;
  void collect_vars(std::set<std::string>& out) const;

  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class CmpOp : std::uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

struct Comparison {
  CmpOp op = CmpOp::Eq;
  Term lhs;
  Term rhs;

  void collect_vars(std::set<std::string>& out) const;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

enum class AggFunc : std::uint8_t { Count, Sum };

struct Literal;

struct AggElement {
  std::vector<Term> tuple;
  std::vector<Literal> cond;

  friend bool operator==(const AggElement&, const AggElement&);
};

/// `lower <= #func{ elements }`; the only aggregate shape the language keeps.
struct Aggregate {
  AggFunc func = AggFunc::Count;
  std::vector<AggElement> elements;
  Term lower;

  friend bool operator==(const Aggregate&, const Aggregate&);
};

struct Literal {
  enum class Kind : std::uint8_t { Atom, Cmp, Agg };

  Kind kind = Kind::Atom;
  bool negated = false;
  Atom atom;
  Comparison cmp;
  std::shared_ptr<const Aggregate> agg;

  static Literal positive(Atom a);
  static Literal negative(Atom a);
  static Literal comparison(Comparison c);
  static Literal aggregate(Aggregate a);

  friend bool operator==(const Literal& a, const Literal& b);
};

struct ChoiceElement {
  Atom atom;
  std::vector<Literal> cond;

  friend bool operator==(const ChoiceElement&, const ChoiceElement&) = default;
};

struct Rule {
  enum class HeadKind : std::uint8_t { None, Atom, Choice };

  HeadKind head_kind = HeadKind::None;
  Atom head;
  std::vector<ChoiceElement> choice;
  std::vector<Literal> body;
  int line = 0;

  bool is_constraint() const { return head_kind == HeadKind::None; }
  bool is_fact() const { return head_kind == HeadKind::Atom && body.empty(); }

  // line numbers are not structural
  friend bool operator==(const Rule& a, const Rule& b) {
    return a.head_kind == b.head_kind && a.head == b.head && a.choice == b.choice &&
           a.body == b.body;
  }
};

/// Sign symbol of a heuristic atom: none, `+` (strongly positive), `-`
/// (strongly negative).
enum class Sign : std::uint8_t { Plain, Pos, Neg };

struct HeuristicAtom {
  Sign sign = Sign::Plain;
  Atom atom;

  friend bool operator==(const HeuristicAtom&, const HeuristicAtom&) = default;
};

struct HeuristicDirective {
  HeuristicAtom head;
  std::vector<HeuristicAtom> pos;    // c+
  std::vector<HeuristicAtom> neg;    // c-, each read as `not ha`
  std::vector<Comparison> builtins;  // evaluated while grounding
  Term weight = Term::integer(0);
  Term level = Term::integer(0);
  int line = 0;

  friend bool operator==(const HeuristicDirective& a, const HeuristicDirective& b) {
    return a.head == b.head && a.pos == b.pos && a.neg == b.neg && a.builtins == b.builtins &&
           a.weight == b.weight && a.level == b.level;
  }
};

struct Program {
  std::vector<Rule> rules;
  std::vector<HeuristicDirective> directives;
  std::vector<std::string> warnings;

  friend bool operator==(const Program& a, const Program& b) {
    return a.rules == b.rules && a.directives == b.directives;
  }
};

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(CmpOp op);
std::string to_string(const Comparison& c);
std::string to_string(const Literal& l);
std::string to_string(const HeuristicAtom& h);
std::string to_string(const Rule& r);
std::string to_string(const HeuristicDirective& d);
/// One statement per line; re-parses to a structurally equal program.
std::string to_string(const Program& p);

}  // namespace lazyheur
