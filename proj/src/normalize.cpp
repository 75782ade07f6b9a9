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

#include "lazyheur/normalize.hpp"

#include <set>

#include "lazyheur/error.hpp"
#include "lazyheur/eval.hpp"

namespace lazyheur {

std::string complement_pred(std::string_view pred) {
  return std::string(kComplementPrefix) + std::string(pred);
}

bool is_internal_pred(std::string_view pred) { return !pred.empty() && pred.front() == '_'; }

namespace {

[[noreturn]] void unsafe(const std::string& var, const std::string& stmt, int line) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ": " : "";
  throw Error(ErrorCode::Unsafe, where + "unsafe variable " + var + " in: " + stmt);
}

void require_bound(const std::set<std::string>& vars, const std::set<std::string>& bound,
                   const std::string& stmt, int line) {
  for (const auto& v : vars)
    if (!bound.count(v)) unsafe(v, stmt, line);
}

template <class T>
std::set<std::string> vars_of(const T& x) {
  std::set<std::string> out;
  x.collect_vars(out);
  return out;
}

bool atom_has_anon(const Atom& a) {
  for (const auto& t : a.args)
    if (t.has_anon()) return true;
  return false;
}

void check_positive_atom(const Atom& a, const std::string& stmt) {
  for (const auto& t : a.args) {
    if (t.is_arithmetic())
      throw Error(ErrorCode::Unsupported, "arithmetic in positive body atom " + to_string(a) +
                                              " of: " + stmt);
    if (t.has_interval())
      throw Error(ErrorCode::Unsupported, "interval in body atom " + to_string(a) + " of: " + stmt);
  }
}

void check_rule_safety(const Rule& r) {
  const std::string stmt = to_string(r);
  std::set<std::string> bound;
  for (const auto& l : r.body) {
    if (l.kind == Literal::Kind::Atom && !l.negated) {
      check_positive_atom(l.atom, stmt);
      l.atom.collect_vars(bound);
    }
  }
  auto no_anon = [&](bool has, const char* where) {
    if (has) unsafe(std::string("_ (") + where + ")", stmt, r.line);
  };
  if (r.head_kind == Rule::HeadKind::Atom) {
    no_anon(atom_has_anon(r.head), "head");
    require_bound(vars_of(r.head), bound, stmt, r.line);
  }
  for (const auto& l : r.body) {
    switch (l.kind) {
      case Literal::Kind::Atom:
        if (l.negated) {
          no_anon(atom_has_anon(l.atom), "negative body");
          for (const auto& t : l.atom.args)
            if (t.has_interval())
              throw Error(ErrorCode::Unsupported, "interval in body atom of: " + stmt);
          require_bound(vars_of(l.atom), bound, stmt, r.line);
        }
        break;
      case Literal::Kind::Cmp:
        no_anon(l.cmp.lhs.has_anon() || l.cmp.rhs.has_anon(), "comparison");
        require_bound(vars_of(l.cmp), bound, stmt, r.line);
        break;
      case Literal::Kind::Agg: {
        const Aggregate& agg = *l.agg;
        no_anon(agg.lower.has_anon(), "aggregate bound");
        require_bound(vars_of(agg.lower), bound, stmt, r.line);
        for (const auto& e : agg.elements) {
          std::set<std::string> local = bound;
          for (const auto& c : e.cond) {
            if (c.kind == Literal::Kind::Atom && !c.negated) {
              check_positive_atom(c.atom, stmt);
              c.atom.collect_vars(local);
            }
          }
          for (const auto& t : e.tuple) {
            no_anon(t.has_anon(), "aggregate tuple");
            require_bound(vars_of(t), local, stmt, r.line);
          }
          for (const auto& c : e.cond) {
            if (c.kind == Literal::Kind::Atom && c.negated) {
              no_anon(atom_has_anon(c.atom), "negative condition");
              require_bound(vars_of(c.atom), local, stmt, r.line);
            } else if (c.kind == Literal::Kind::Cmp) {
              require_bound(vars_of(c.cmp), local, stmt, r.line);
            }
          }
        }
        break;
      }
    }
  }
}

void check_directive_safety(const HeuristicDirective& d) {
  const std::string stmt = to_string(d);
  std::set<std::string> bound;
  for (const auto& h : d.pos) {
    check_positive_atom(h.atom, stmt);
    h.atom.collect_vars(bound);
  }
  auto no_anon = [&](bool has, const char* where) {
    if (has) unsafe(std::string("_ (") + where + ")", stmt, d.line);
  };
  no_anon(atom_has_anon(d.head.atom) || d.weight.has_anon() || d.level.has_anon(), "head");
  require_bound(vars_of(d.head.atom), bound, stmt, d.line);
  require_bound(vars_of(d.weight), bound, stmt, d.line);
  require_bound(vars_of(d.level), bound, stmt, d.line);
  for (const auto& h : d.neg) require_bound(vars_of(h.atom), bound, stmt, d.line);
  for (const auto& c : d.builtins) {
    no_anon(c.lhs.has_anon() || c.rhs.has_anon(), "comparison");
    require_bound(vars_of(c), bound, stmt, d.line);
  }
}

// Expands a ground fact whose arguments may contain intervals.
void expand_fact(const Rule& r, std::vector<Rule>& out, std::vector<std::string>& warnings) {
  std::vector<std::vector<Term>> choices;
  for (const auto& t : r.head.args) {
    std::vector<Term> vals;
    if (t.kind == Term::Kind::Interval) {
      Value lo = eval(t.args[0]), hi = eval(t.args[1]);
      if (!lo.is_int() || !hi.is_int())
        throw Error(ErrorCode::Eval, "non-integer interval bound in " + to_string(r));
      if (lo.as_int() > hi.as_int())
        warnings.push_back("E_BAD_INTERVAL: empty interval in " + to_string(r));
      for (auto i = lo.as_int(); i <= hi.as_int(); ++i) vals.push_back(Term::integer(i));
    } else if (t.has_interval()) {
      throw Error(ErrorCode::Unsupported, "interval nested in arithmetic in " + to_string(r));
    } else if (t.is_arithmetic()) {
      Value v = eval(t);
      vals.push_back(v.is_int() ? Term::integer(v.as_int()) : Term::symbol(v.to_string()));
    } else {
      vals.push_back(t);
    }
    choices.push_back(std::move(vals));
  }
  std::vector<Term> cur(choices.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == choices.size()) {
      Rule f;
      f.head_kind = Rule::HeadKind::Atom;
      f.head.pred = r.head.pred;
      f.head.args = cur;
      f.line = r.line;
      out.push_back(std::move(f));
      return;
    }
    for (const auto& v : choices[i]) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

void compile_choice(const Rule& r, std::vector<Rule>& out) {
  for (const auto& e : r.choice) {
    for (const auto& t : e.atom.args)
      if (t.has_interval())
        throw Error(ErrorCode::Unsupported, "interval in choice element of: " + to_string(r));
    Atom comp{complement_pred(e.atom.pred), e.atom.args};
    auto make = [&](const Atom& head, const Atom& blocked) {
      Rule nr;
      nr.head_kind = Rule::HeadKind::Atom;
      nr.head = head;
      nr.line = r.line;
      nr.body = r.body;
      nr.body.insert(nr.body.end(), e.cond.begin(), e.cond.end());
      nr.body.push_back(Literal::negative(blocked));
      return nr;
    };
    out.push_back(make(e.atom, comp));
    out.push_back(make(comp, e.atom));
  }
}

}  // namespace

Program normalize(const Program& p) {
  Program out;
  out.warnings = p.warnings;
  for (const auto& r : p.rules) {
    if (r.head_kind == Rule::HeadKind::Choice) {
      // safety of the compiled pair covers the element atoms and conditions
      std::vector<Rule> compiled;
      compile_choice(r, compiled);
      for (auto& c : compiled) {
        check_rule_safety(c);
        out.rules.push_back(std::move(c));
      }
    } else if (r.is_fact() && r.head.is_ground()) {
      expand_fact(r, out.rules, out.warnings);
    } else {
      check_rule_safety(r);
      out.rules.push_back(r);
    }
  }
  for (const auto& d : p.directives) {
    check_directive_safety(d);
    out.directives.push_back(d);
  }
  return out;
}

std::vector<Atom> HeuristicRule::grounding_key() const {
  std::vector<Atom> key;
  for (const auto& h : pos) key.push_back(h.atom);
  return key;
}

HeuristicRule directive_to_heuristic_rule(const HeuristicDirective& d) {
  HeuristicRule r;
  r.head_atom = d.head.atom;
  r.weight = d.weight;
  r.level = d.level;
  r.sign = d.head.sign != Sign::Neg;
  r.pos = d.pos;
  r.neg = d.neg;
  r.builtins = d.builtins;
  return r;
}

std::string to_string(const HeuristicRule& r) {
  std::string s = "_h(" + to_string(r.head_atom) + ", " + to_string(r.weight) + ", " +
                  to_string(r.level) + ", " + (r.sign ? "true" : "false") + ")";
  std::vector<std::string> body;
  for (const auto& h : r.pos) body.push_back(to_string(h));
  for (const auto& c : r.builtins) body.push_back(to_string(c));
  for (const auto& h : r.neg) body.push_back("not " + to_string(h));
  if (!body.empty()) {
    s += " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) s += (i ? ", " : "") + body[i];
  }
  return s + ".";
}

}  // namespace lazyheur
