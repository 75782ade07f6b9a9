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

#include "lazyheur/ast.hpp"

#include <sstream>

namespace lazyheur {

Term Term::integer(std::int64_t v) {
  Term t;
  t.kind = Kind::Int;
  t.num = v;
  return t;
}

Term Term::symbol(std::string name) {
  Term t;
  t.kind = Kind::Sym;
  t.name = std::move(name);
  return t;
}

Term Term::var(std::string name) {
  Term t;
  t.kind = Kind::Var;
  t.name = std::move(name);
  return t;
}

Term Term::anon() {
  Term t;
  t.kind = Kind::Anon;
  return t;
}

Term Term::binop(char op, Term lhs, Term rhs) {
  Term t;
  t.kind = Kind::BinOp;
  t.op = op;
  t.args.push_back(std::move(lhs));
  t.args.push_back(std::move(rhs));
  return t;
}

Term Term::negate(Term inner) {
  if (inner.kind == Kind::Int) return integer(-inner.num);
  Term t;
  t.kind = Kind::Neg;
  t.args.push_back(std::move(inner));
  return t;
}

Term Term::interval(Term lo, Term hi) {
  Term t;
  t.kind = Kind::Interval;
  t.args.push_back(std::move(lo));
  t.args.push_back(std::move(hi));
  return t;
}

bool Term::is_ground() const {
  if (kind == Kind::Var || kind == Kind::Anon) return false;
  for (const auto& a : args)
    if (!a.is_ground()) return false;
  return true;
}

bool Term::has_interval() const {
  if (kind == Kind::Interval) return true;
  for (const auto& a : args)
    if (a.has_interval()) return true;
  return false;
}

bool Term::has_anon() const {
  if (kind == Kind::Anon) return true;
  for (const auto& a : args)
    if (a.has_anon()) return true;
  return false;
}

void Term::collect_vars(std::set<std::string>& out) const {
  if (kind == Kind::Var) out.insert(name);
  for (const auto& a : args) a.collect_vars(out);
}

bool Atom::is_ground() const {
  for (const auto& a : args)
    if (!a.is_ground()) return false;
  return true;
}

void Atom::collect_vars(std::set<std::string>& out) const {
  for (const auto& a : args) a.collect_vars(out);
}

void Comparison::collect_vars(std::set<std::string>& out) const {
  lhs.collect_vars(out);
  rhs.collect_vars(out);
}

bool operator==(const AggElement& a, const AggElement& b) {
  return a.tuple == b.tuple && a.cond == b.cond;
}

bool operator==(const Aggregate& a, const Aggregate& b) {
  return a.func == b.func && a.elements == b.elements && a.lower == b.lower;
}

Literal Literal::positive(Atom a) {
  Literal l;
  l.kind = Kind::Atom;
  l.atom = std::move(a);
  return l;
}

Literal Literal::negative(Atom a) {
  Literal l = positive(std::move(a));
  l.negated = true;
  return l;
}

Literal Literal::comparison(Comparison c) {
  Literal l;
  l.kind = Kind::Cmp;
  l.cmp = std::move(c);
  return l;
}

Literal Literal::aggregate(Aggregate a) {
  Literal l;
  l.kind = Kind::Agg;
  l.agg = std::make_shared<const Aggregate>(std::move(a));
  return l;
}

bool operator==(const Literal& a, const Literal& b) {
  if (a.kind != b.kind || a.negated != b.negated) return false;
  switch (a.kind) {
    case Literal::Kind::Atom: return a.atom == b.atom;
    case Literal::Kind::Cmp: return a.cmp == b.cmp;
    case Literal::Kind::Agg: return *a.agg == *b.agg;
  }
  return false;
}

namespace {

void print(std::ostream& os, const Term& t, bool nested) {
  switch (t.kind) {
    case Term::Kind::Int: os << t.num; break;
    case Term::Kind::Sym:
    case Term::Kind::Var: os << t.name; break;
    case Term::Kind::Anon: os << '_'; break;
    case Term::Kind::Neg:
      os << '-';
      print(os, t.args[0], true);
      break;
    case Term::Kind::BinOp:
      if (nested) os << '(';
      print(os, t.args[0], true);
      os << t.op;
      print(os, t.args[1], true);
      if (nested) os << ')';
      break;
    case Term::Kind::Interval:
      print(os, t.args[0], true);
      os << "..";
      print(os, t.args[1], true);
      break;
  }
}

template <class Seq, class Fn>
void join(std::ostream& os, const Seq& seq, const char* sep, Fn&& fn) {
  bool first = true;
  for (const auto& x : seq) {
    if (!first) os << sep;
    first = false;
    fn(x);
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t, false);
  return os.str();
}

std::string to_string(const Atom& a) {
  std::string s = a.pred;
  if (a.args.empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ',';
    s += to_string(a.args[i]);
  }
  s += ')';
  return s;
}

std::string to_string(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

std::string to_string(const Comparison& c) {
  return to_string(c.lhs) + " " + to_string(c.op) + " " + to_string(c.rhs);
}

static std::string to_string(const Aggregate& a) {
  std::ostringstream os;
  os << to_string(a.lower) << " <= " << (a.func == AggFunc::Sum ? "#sum" : "#count") << " { ";
  join(os, a.elements, "; ", [&](const AggElement& e) {
    join(os, e.tuple, ",", [&](const Term& t) { os << to_string(t); });
    if (!e.cond.empty()) {
      os << " : ";
      join(os, e.cond, ", ", [&](const Literal& l) { os << to_string(l); });
    }
  });
  os << " }";
  return os.str();
}

std::string to_string(const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::Atom: return (l.negated ? "not " : "") + to_string(l.atom);
    case Literal::Kind::Cmp: return to_string(l.cmp);
    case Literal::Kind::Agg: return to_string(*l.agg);
  }
  return {};
}

std::string to_string(const HeuristicAtom& h) {
  const char* sign = h.sign == Sign::Pos ? "+" : h.sign == Sign::Neg ? "-" : "";
  return sign + to_string(h.atom);
}

std::string to_string(const Rule& r) {
  std::ostringstream os;
  if (r.head_kind == Rule::HeadKind::Atom) {
    os << to_string(r.head);
  } else if (r.head_kind == Rule::HeadKind::Choice) {
    os << "{ ";
    join(os, r.choice, "; ", [&](const ChoiceElement& e) {
      os << to_string(e.atom);
      if (!e.cond.empty()) {
        os << " : ";
        join(os, e.cond, ", ", [&](const Literal& l) { os << to_string(l); });
      }
    });
    os << " }";
  }
  if (!r.body.empty() || r.head_kind == Rule::HeadKind::None) {
    os << (r.head_kind == Rule::HeadKind::None ? ":- " : " :- ");
    join(os, r.body, ", ", [&](const Literal& l) { os << to_string(l); });
  }
  os << '.';
  return os.str();
}

std::string to_string(const HeuristicDirective& d) {
  std::ostringstream os;
  os << "#heuristic " << to_string(d.head);
  if (!d.pos.empty() || !d.neg.empty() || !d.builtins.empty()) {
    os << " : ";
    bool first = true;
    auto sep = [&] {
      if (!first) os << ", ";
      first = false;
    };
    for (const auto& h : d.pos) sep(), os << to_string(h);
    for (const auto& c : d.builtins) sep(), os << to_string(c);
    for (const auto& h : d.neg) sep(), os << "not " << to_string(h);
  }
  os << ". [" << to_string(d.weight) << '@' << to_string(d.level) << ']';
  return os.str();
}

std::string to_string(const Program& p) {
  std::string out;
  for (const auto& r : p.rules) out += to_string(r) + "\n";
  for (const auto& d : p.directives) out += to_string(d) + "\n";
  return out;
}

}  // namespace lazyheur
