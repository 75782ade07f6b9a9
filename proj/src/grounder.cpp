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

#include "lazyheur/grounder.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lazyheur/error.hpp"
#include "lazyheur/eval.hpp"

namespace lazyheur {

// ---------------------------------------------------------------------------
// AtomStore

std::size_t AtomStore::KeyHash::operator()(const std::vector<Value>& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto& v : k) h = (h ^ v.hash()) * 1099511628211ull;
  return h;
}

PredId AtomStore::pred(std::string_view name, std::uint32_t arity) {
  std::string key = std::string(name) + "/" + std::to_string(arity);
  auto it = pred_ids_.find(key);
  if (it != pred_ids_.end()) return it->second;
  auto id = static_cast<PredId>(preds_.size());
  preds_.push_back({std::string(name), arity});
  by_pred_.emplace_back();
  pred_ids_.emplace(std::move(key), id);
  return id;
}

AtomId AtomStore::intern(PredId p, std::span<const Value> args, AtomKind kind) {
  std::vector<Value> key;
  key.reserve(args.size() + 1);
  key.push_back(Value::integer(p));
  key.insert(key.end(), args.begin(), args.end());
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<AtomId>(atoms_.size());
  atoms_.push_back({p, static_cast<std::uint32_t>(args_.size()),
                    static_cast<std::uint32_t>(args.size()), kind});
  args_.insert(args_.end(), args.begin(), args.end());
  by_pred_[p].push_back(id);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<AtomId> AtomStore::find(PredId p, std::span<const Value> args) const {
  std::vector<Value> key;
  key.push_back(Value::integer(p));
  key.insert(key.end(), args.begin(), args.end());
  auto it = ids_.find(key);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

AtomId AtomStore::new_body_atom() {
  if (body_pred_ == kNone) body_pred_ = pred("_body", 1);
  Value v = Value::integer(body_counter_++);
  return intern(body_pred_, std::span<const Value>(&v, 1), AtomKind::Body);
}

bool AtomStore::is_internal(AtomId a) const {
  return atoms_[a].kind != AtomKind::Program || preds_[atoms_[a].pred].name.front() == '_';
}

std::string AtomStore::to_string(AtomId a) const {
  const auto& info = atoms_[a];
  std::string s = preds_[info.pred].name;
  if (info.arity == 0) return s;
  s += '(';
  for (std::uint32_t i = 0; i < info.arity; ++i) {
    if (i) s += ',';
    s += args_[info.offset + i].to_string();
  }
  return s + ')';
}

// ---------------------------------------------------------------------------
// Compilation

namespace {

bool is_plain(const CTerm& t) {
  return t.kind == CTerm::Kind::Const || t.kind == CTerm::Kind::Var;
}

void collect_cvars(const CTerm& t, std::set<std::uint32_t>& out) {
  if (t.kind == CTerm::Kind::Var) out.insert(t.var);
  for (const auto& a : t.args) collect_cvars(a, out);
}

std::string join_ids(std::vector<AtomId> ids, bool sort) {
  if (sort) std::sort(ids.begin(), ids.end());
  std::string s;
  for (auto id : ids) s += std::to_string(id) + ",";
  return s;
}

}  // namespace

Grounder::Grounder(const Program& normalized, GrounderOptions opts) : opts_(opts) {
  compile(normalized);
}

CTerm Grounder::compile_term(const Term& t, std::unordered_map<std::string, std::uint32_t>& vars,
                             std::vector<std::string>& names, bool anon_is_wild) {
  CTerm c;
  switch (t.kind) {
    case Term::Kind::Int: c.value = Value::integer(t.num); break;
    case Term::Kind::Sym: c.value = Value::symbol(t.name); break;
    case Term::Kind::Var: {
      c.kind = CTerm::Kind::Var;
      auto [it, fresh] = vars.emplace(t.name, static_cast<std::uint32_t>(names.size()));
      if (fresh) names.push_back(t.name);
      c.var = it->second;
      break;
    }
    case Term::Kind::Anon:
      if (anon_is_wild) {
        c.kind = CTerm::Kind::Wild;
      } else {
        c.kind = CTerm::Kind::Var;
        c.var = static_cast<std::uint32_t>(names.size());
        names.push_back("_");
      }
      break;
    case Term::Kind::BinOp:
      c.kind = CTerm::Kind::BinOp;
      c.op = t.op;
      break;
    case Term::Kind::Neg: c.kind = CTerm::Kind::Neg; break;
    case Term::Kind::Interval: c.kind = CTerm::Kind::Interval; break;
  }
  for (const auto& a : t.args) c.args.push_back(compile_term(a, vars, names, anon_is_wild));
  return c;
}

CAtom Grounder::compile_atom(const Atom& a, std::unordered_map<std::string, std::uint32_t>& vars,
                             std::vector<std::string>& names, bool anon_is_wild) {
  CAtom c;
  c.pred = store_.pred(a.pred, static_cast<std::uint32_t>(a.args.size()));
  for (const auto& t : a.args) c.args.push_back(compile_term(t, vars, names, anon_is_wild));
  return c;
}

void Grounder::compile(const Program& p) {
  std::vector<std::pair<Rule, std::uint32_t>> work;
  for (const auto& r : p.rules) work.emplace_back(r, kNone);
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto [rule, element_of] = work[i];  // copy: work may grow
    compile_rule(rule, element_of, work);
  }
  for (const auto& d : p.directives) compile_directive(d);
  for (std::uint32_t i = 0; i < src_.size(); ++i) index_rule(i);
}

void Grounder::compile_rule(const Rule& r, std::uint32_t element_of,
                            std::vector<std::pair<Rule, std::uint32_t>>& work) {
  SourceRule s;
  s.kind = r.is_constraint() ? SourceRule::Kind::Constraint : SourceRule::Kind::Normal;
  s.text = to_string(r);
  s.element_of = element_of;
  std::unordered_map<std::string, std::uint32_t> vars;
  auto& names = s.var_names;

  std::set<std::string> outer;
  for (const auto& l : r.body) {
    if (l.kind == Literal::Kind::Atom && !l.negated) {
      s.pos.push_back({compile_atom(l.atom, vars, names, false), Sign::Plain});
      l.atom.collect_vars(outer);
    }
  }
  if (r.head_kind == Rule::HeadKind::Atom) s.head = compile_atom(r.head, vars, names, false);
  for (const auto& l : r.body) {
    if (l.kind == Literal::Kind::Atom && l.negated) {
      s.neg.push_back({compile_atom(l.atom, vars, names, false), Sign::Plain});
    } else if (l.kind == Literal::Kind::Cmp) {
      s.cmps.push_back({l.cmp.op, compile_term(l.cmp.lhs, vars, names, false),
                        compile_term(l.cmp.rhs, vars, names, false)});
    } else if (l.kind == Literal::Kind::Agg) {
      const Aggregate& agg = *l.agg;
      auto n = static_cast<std::uint32_t>(specs_.size());
      std::set<std::string> inner;
      for (const auto& e : agg.elements) {
        for (const auto& t : e.tuple) t.collect_vars(inner);
        for (const auto& c : e.cond) {
          if (c.kind == Literal::Kind::Atom) c.atom.collect_vars(inner);
          if (c.kind == Literal::Kind::Cmp) c.cmp.collect_vars(inner);
        }
      }
      std::vector<std::string> globals;
      for (const auto& v : inner)
        if (outer.count(v)) globals.push_back(v);
      AggSpec spec{agg.func, static_cast<std::uint32_t>(globals.size()),
                   store_.pred("_ag" + std::to_string(n),
                               static_cast<std::uint32_t>(globals.size() + 1)),
                   "_ae" + std::to_string(n)};
      specs_.push_back(spec);

      CAggRef ref;
      ref.spec = n;
      for (const auto& g : globals) ref.globals.push_back(compile_term(Term::var(g), vars, names, false));
      ref.bound = compile_term(agg.lower, vars, names, false);
      s.aggs.push_back(std::move(ref));

      for (const auto& e : agg.elements) {
        Rule er;
        er.head_kind = Rule::HeadKind::Atom;
        er.head.pred = spec.element_name;
        for (const auto& g : globals) er.head.args.push_back(Term::var(g));
        er.head.args.insert(er.head.args.end(), e.tuple.begin(), e.tuple.end());
        er.line = r.line;
        er.body = e.cond;
        std::set<std::string> bound;
        for (const auto& c : e.cond)
          if (c.kind == Literal::Kind::Atom && !c.negated) c.atom.collect_vars(bound);
        std::set<std::string> missing;
        for (const auto& g : globals)
          if (!bound.count(g)) missing.insert(g);
        // bind globals the condition leaves open through the outer context
        for (const auto& ol : r.body) {
          if (missing.empty()) break;
          if (ol.kind != Literal::Kind::Atom || ol.negated) continue;
          std::set<std::string> av;
          ol.atom.collect_vars(av);
          bool useful = false;
          for (const auto& v : av) useful |= missing.erase(v) > 0;
          if (useful) er.body.push_back(ol);
        }
        element_pred_spec_[store_.pred(er.head.pred, static_cast<std::uint32_t>(er.head.args.size()))] = n;
        work.emplace_back(std::move(er), n);
      }
    }
  }
  s.num_vars = static_cast<std::uint32_t>(names.size());

  if (s.kind == SourceRule::Kind::Normal) {
    std::set<std::uint32_t> head_vars, body_vars;
    bool plain = true;
    for (const auto& t : s.head->args) {
      plain &= is_plain(t);
      collect_cvars(t, head_vars);
    }
    for (const auto& l : s.pos)
      for (const auto& t : l.atom.args) collect_cvars(t, body_vars);
    s.closable = plain && std::includes(head_vars.begin(), head_vars.end(), body_vars.begin(),
                                        body_vars.end());
  }
  src_.push_back(std::move(s));
}

void Grounder::compile_directive(const HeuristicDirective& d) {
  HeuristicRule hr = directive_to_heuristic_rule(d);
  SourceRule s;
  s.kind = SourceRule::Kind::Heuristic;
  s.text = to_string(hr);
  std::unordered_map<std::string, std::uint32_t> vars;
  auto& names = s.var_names;
  for (const auto& h : hr.pos) s.pos.push_back({compile_atom(h.atom, vars, names, false), h.sign});
  s.head = compile_atom(hr.head_atom, vars, names, false);
  s.head_sign = d.head.sign;
  for (const auto& h : hr.neg) s.neg.push_back({compile_atom(h.atom, vars, names, true), h.sign});
  for (const auto& c : hr.builtins)
    s.cmps.push_back({c.op, compile_term(c.lhs, vars, names, false),
                      compile_term(c.rhs, vars, names, false)});
  s.weight = compile_term(hr.weight, vars, names, false);
  s.level = compile_term(hr.level, vars, names, false);
  s.num_vars = static_cast<std::uint32_t>(names.size());
  src_.push_back(std::move(s));
}

void Grounder::index_rule(std::uint32_t id) {
  const SourceRule& r = src_[id];
  auto grow = [&](auto& v, PredId p) {
    if (v.size() <= p) v.resize(store_.num_preds());
  };
  if (r.pos.empty()) seedless_.push_back(id);
  for (std::uint32_t i = 0; i < r.pos.size(); ++i) {
    PredId p = r.pos[i].atom.pred;
    auto& idx = r.pos[i].sign == Sign::Neg ? seed_assigned_ : seed_known_;
    grow(idx, p);
    idx[p].emplace_back(id, i);
  }
  if (r.kind == SourceRule::Kind::Normal) {
    grow(head_sources_, r.head->pred);
    head_sources_[r.head->pred].push_back(id);
  }
}

// ---------------------------------------------------------------------------
// Matching

std::uint64_t Grounder::first_key(PredId p, const Value& v) {
  return (static_cast<std::uint64_t>(p) << 40) ^ (v.hash() & ((1ull << 40) - 1)) ^
         (v.is_int() ? 0 : (1ull << 39));
}

void Grounder::add_to_index(MatchIndex& idx, AtomId a) {
  PredId p = store_.pred_of(a);
  if (idx.by_pred.size() <= p) idx.by_pred.resize(store_.num_preds());
  idx.by_pred[p].push_back(a);
  auto args = store_.args(a);
  if (!args.empty()) idx.by_first[first_key(p, args[0])].push_back(a);
}

bool Grounder::unify(const CAtom& pat, AtomId a, Binding& b,
                     std::vector<std::uint32_t>& trail) const {
  if (store_.pred_of(a) != pat.pred) return false;
  auto args = store_.args(a);
  for (std::size_t i = 0; i < pat.args.size(); ++i) {
    const CTerm& t = pat.args[i];
    switch (t.kind) {
      case CTerm::Kind::Const:
        if (!(t.value == args[i])) return false;
        break;
      case CTerm::Kind::Var:
        if (b.set[t.var]) {
          if (!(b.vals[t.var] == args[i])) return false;
        } else {
          b.set[t.var] = 1;
          b.vals[t.var] = args[i];
          trail.push_back(t.var);
        }
        break;
      case CTerm::Kind::Wild: break;
      default:
        // arithmetic in matched positions is rejected by normalize()
        if (!(eval(t, b) == args[i])) return false;
        break;
    }
  }
  return true;
}

Value Grounder::eval(const CTerm& t, const Binding& b) const {
  switch (t.kind) {
    case CTerm::Kind::Const: return t.value;
    case CTerm::Kind::Var:
      if (!b.set[t.var]) throw Error(ErrorCode::Eval, "unbound variable during grounding");
      return b.vals[t.var];
    case CTerm::Kind::BinOp: return arith(t.op, eval(t.args[0], b), eval(t.args[1], b));
    case CTerm::Kind::Neg: return negate(eval(t.args[0], b));
    case CTerm::Kind::Interval: throw Error(ErrorCode::Eval, "interval in value position");
    case CTerm::Kind::Wild: throw Error(ErrorCode::Eval, "anonymous variable has no value");
  }
  return {};
}

void Grounder::eval_expand(const CTerm& t, const Binding& b, std::vector<Value>& out) const {
  if (t.kind != CTerm::Kind::Interval) {
    out.push_back(eval(t, b));
    return;
  }
  Value lo = eval(t.args[0], b), hi = eval(t.args[1], b);
  if (!lo.is_int() || !hi.is_int()) throw Error(ErrorCode::Eval, "non-integer interval bound");
  for (auto i = lo.as_int(); i <= hi.as_int(); ++i) out.push_back(Value::integer(i));
}

AtomId Grounder::intern_head(PredId p, std::span<const Value> args) {
  AtomKind kind = element_pred_spec_.count(p) ? AtomKind::Element : AtomKind::Program;
  return store_.intern(p, args, kind);
}

AtomId Grounder::ground_atom(const CAtom& a, const Binding& b) {
  std::vector<Value> vals;
  vals.reserve(a.args.size());
  for (const auto& t : a.args) vals.push_back(eval(t, b));
  return intern_head(a.pred, vals);
}

GroundingDelta Grounder::start() {
  GroundingDelta out;
  out.first_new_atom = static_cast<AtomId>(store_.size());
  for (auto id : seedless_) {
    Binding b{std::vector<Value>(src_[id].num_vars), std::vector<std::uint8_t>(src_[id].num_vars)};
    instantiate(id, b, {}, out);
  }
  return out;
}

GroundingDelta Grounder::ground_new(std::span<const AtomId> known, std::span<const AtomId> assigned) {
  GroundingDelta out;
  out.first_new_atom = static_cast<AtomId>(store_.size());
  if (known_stamp_.size() < store_.size()) known_stamp_.resize(store_.size(), 0);
  if (assigned_stamp_.size() < store_.size()) assigned_stamp_.resize(store_.size(), 0);
  std::vector<AtomId> fresh_known, fresh_assigned;
  for (AtomId a : known) {
    if (known_stamp_[a]) continue;
    known_stamp_[a] = ++clock_;
    add_to_index(known_idx_, a);
    fresh_known.push_back(a);
  }
  for (AtomId a : assigned) {
    if (assigned_stamp_[a]) continue;
    assigned_stamp_[a] = ++clock_;
    add_to_index(assigned_idx_, a);
    fresh_assigned.push_back(a);
  }
  for (AtomId a : fresh_known) {
    PredId p = store_.pred_of(a);
    if (p >= seed_known_.size()) continue;
    for (auto [rule, pos] : seed_known_[p]) match(rule, pos, a, out);
  }
  for (AtomId a : fresh_assigned) {
    PredId p = store_.pred_of(a);
    if (p >= seed_assigned_.size()) continue;
    for (auto [rule, pos] : seed_assigned_[p]) match(rule, pos, a, out);
  }
  return out;
}

void Grounder::match(std::uint32_t rule, std::uint32_t seed_pos, AtomId seed, GroundingDelta& out) {
  const SourceRule& r = src_[rule];
  Binding b{std::vector<Value>(r.num_vars), std::vector<std::uint8_t>(r.num_vars)};
  std::vector<std::uint32_t> trail;
  if (!unify(r.pos[seed_pos].atom, seed, b, trail)) return;
  std::vector<AtomId> keys(r.pos.size(), kNoAtom);
  keys[seed_pos] = seed;
  join(r, rule, seed_pos, 0, b, keys, out);
}

void Grounder::join(const SourceRule& r, std::uint32_t rule, std::uint32_t seed_pos,
                    std::uint32_t next, Binding& b, std::vector<AtomId>& keys,
                    GroundingDelta& out) {
  if (next == seed_pos) ++next;
  if (next >= r.pos.size()) {
    instantiate(rule, b, keys, out);
    return;
  }
  const CLit& lit = r.pos[next];
  const MatchIndex& idx = lit.sign == Sign::Neg ? assigned_idx_ : known_idx_;
  const std::vector<AtomId>* cands = nullptr;
  static const std::vector<AtomId> kEmpty;
  if (!lit.atom.args.empty() && (lit.atom.args[0].kind == CTerm::Kind::Const ||
                                 (lit.atom.args[0].kind == CTerm::Kind::Var && b.set[lit.atom.args[0].var]))) {
    const CTerm& f = lit.atom.args[0];
    Value v = f.kind == CTerm::Kind::Const ? f.value : b.vals[f.var];
    auto it = idx.by_first.find(first_key(lit.atom.pred, v));
    cands = it == idx.by_first.end() ? &kEmpty : &it->second;
  } else {
    cands = lit.atom.pred < idx.by_pred.size() ? &idx.by_pred[lit.atom.pred] : &kEmpty;
  }
  std::vector<std::uint32_t> trail;
  for (std::size_t i = 0, n = cands->size(); i < n; ++i) {
    AtomId cand = (*cands)[i];
    trail.clear();
    if (unify(lit.atom, cand, b, trail)) {
      keys[next] = cand;
      join(r, rule, seed_pos, next + 1, b, keys, out);
    }
    for (auto v : trail) b.set[v] = 0;
  }
}

void Grounder::instantiate(std::uint32_t rule, const Binding& b, const std::vector<AtomId>& keys,
                           GroundingDelta& out) {
  const SourceRule& r = src_[rule];
  for (const auto& c : r.cmps)
    if (!compare(c.op, eval(c.lhs, b), eval(c.rhs, b))) return;

  std::vector<std::vector<AtomId>> heads(1);
  if (r.head) {
    std::vector<std::vector<Value>> choices;
    for (const auto& t : r.head->args) {
      choices.emplace_back();
      eval_expand(t, b, choices.back());
    }
    std::vector<Value> cur(choices.size());
    heads[0].clear();
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == choices.size()) {
        heads[0].push_back(intern_head(r.head->pred, cur));
        return;
      }
      for (const auto& v : choices[i]) {
        cur[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }

  if (r.kind == SourceRule::Kind::Heuristic) {
    GroundDirective d;
    d.head_sign = r.head_sign;
    for (std::size_t i = 0; i < r.pos.size(); ++i) d.pos.push_back({r.pos[i].sign, keys[i]});
    for (const auto& l : r.neg) {
      bool wild = false;
      for (const auto& t : l.atom.args) wild |= t.kind == CTerm::Kind::Wild;
      if (!wild) {
        d.neg.push_back({l.sign, ground_atom(l.atom, b)});
        continue;
      }
      GroundPattern pat{l.sign, l.atom.pred, {}};
      for (const auto& t : l.atom.args) {
        if (t.kind == CTerm::Kind::Wild) pat.args.emplace_back(std::nullopt);
        else pat.args.emplace_back(eval(t, b));
      }
      d.neg_patterns.push_back(std::move(pat));
    }
    Value w = eval(r.weight, b), l = eval(r.level, b);
    if (!w.is_int() || !l.is_int())
      throw Error(ErrorCode::Eval, "weight/level of a ground directive is not an integer: " + r.text);
    d.weight = w.as_int();
    d.level = l.as_int();
    for (AtomId h : heads[0]) {
      d.head = h;
      std::ostringstream fp;
      fp << "H|" << rule << '|' << h << '|' << static_cast<int>(d.head_sign) << '|' << d.weight
         << '|' << d.level << '|';
      for (const auto& c : d.pos) fp << static_cast<int>(c.sign) << c.atom << ',';
      fp << '|';
      for (const auto& c : d.neg) fp << static_cast<int>(c.sign) << c.atom << ',';
      for (const auto& p : d.neg_patterns) {
        fp << "|p" << p.pred << ':';
        for (const auto& a : p.args) fp << (a ? a->to_string() : "_") << ',';
      }
      GroundRule gr;
      gr.source = rule;
      gr.is_heuristic = true;
      gr.head = h;
      gr.keys = keys;
      for (const auto& c : d.pos) gr.pos.push_back(c.atom);
      for (const auto& c : d.neg) gr.neg.push_back(c.atom);
      gr.directive = static_cast<std::uint32_t>(directives_.size());
      if (!fingerprints_.insert(fp.str()).second) continue;
      d.id = gr.directive;
      d.rule = static_cast<std::uint32_t>(rules_.size());
      directives_.push_back(d);
      emit_rule(std::move(gr), {}, out);
      out.directives.push_back(d.id);
    }
    return;
  }

  std::vector<AtomId> pos(keys.begin(), keys.end());
  for (const auto& a : r.aggs) {
    std::vector<Value> args;
    for (const auto& g : a.globals) args.push_back(eval(g, b));
    std::vector<Value> globals = args;
    Value k = eval(a.bound, b);
    if (!k.is_int()) throw Error(ErrorCode::Eval, "non-integer aggregate bound in: " + r.text);
    args.push_back(k);
    AtomId agg = store_.intern(specs_[a.spec].atom_pred, args, AtomKind::Aggregate);
    if (!aggregate_group_.count(agg)) {
      std::uint32_t g = group_for(a.spec, std::move(globals));
      groups_[g].bounds.emplace_back(k.as_int(), agg);
      aggregate_group_[agg] = g;
      aggregate_bound_[agg] = k.as_int();
      out.new_aggregates.push_back(agg);
    }
    pos.push_back(agg);
  }
  std::vector<AtomId> neg;
  for (const auto& l : r.neg) neg.push_back(ground_atom(l.atom, b));

  for (AtomId h : r.head ? heads[0] : std::vector<AtomId>{kNoAtom}) {
    if (h != kNoAtom) emitted_heads_.insert((static_cast<std::uint64_t>(rule) << 32) | h);
    std::string fp = (h == kNoAtom ? "C|" : "N|" + std::to_string(h)) + "|" + join_ids(pos, true) +
                     "|" + join_ids(neg, true);
    if (fingerprints_.count(fp)) continue;
    GroundRule gr;
    gr.source = rule;
    gr.is_constraint = h == kNoAtom;
    gr.head = h;
    gr.pos = pos;
    gr.neg = neg;
    gr.keys = keys;
    emit_rule(std::move(gr), fp, out);
  }
}

void Grounder::emit_rule(GroundRule r, const std::string& fingerprint, GroundingDelta& out) {
  if (rules_.size() >= opts_.cap)
    throw Error(ErrorCode::TooLarge, "grounding exceeds the cap of " + std::to_string(opts_.cap) +
                                         " ground rules");
  if (!fingerprint.empty()) fingerprints_.insert(fingerprint);
  r.id = static_cast<std::uint32_t>(rules_.size());
  r.stamp = ++clock_;
  if (!r.is_heuristic && !r.is_constraint) {
    std::string key = join_ids(r.pos, true) + "|" + join_ids(r.neg, true);
    auto [it, fresh] = body_ids_.emplace(key, static_cast<std::uint32_t>(bodies_.size()));
    if (fresh) {
      GroundBody body;
      body.pos = r.pos;
      body.neg = r.neg;
      body.beta = store_.new_body_atom();
      bodies_.push_back(std::move(body));
      out.new_bodies.push_back(it->second);
    }
    r.body = it->second;
    bodies_[r.body].rules.push_back(r.id);
    if (head_rules_.size() <= r.head) head_rules_.resize(store_.size());
    head_rules_[r.head].push_back(r.id);
    auto spec = src_[r.source].element_of;
    if (spec != kNone) register_element(r.head, spec, out);
  }
  if (!r.is_heuristic) out.rules.push_back(r.id);
  rules_.push_back(std::move(r));
}

std::uint32_t Grounder::group_for(std::uint32_t spec, std::vector<Value> globals) {
  std::string key = std::to_string(spec);
  for (const auto& v : globals) key += "|" + v.to_string();
  auto [it, fresh] = group_ids_.emplace(key, static_cast<std::uint32_t>(groups_.size()));
  if (fresh) groups_.push_back(AggGroup{spec, std::move(globals), {}, {}});
  return it->second;
}

void Grounder::register_element(AtomId head, std::uint32_t spec, GroundingDelta& out) {
  if (element_group_.count(head)) return;
  const AggSpec& s = specs_[spec];
  auto args = store_.args(head);
  std::vector<Value> globals(args.begin(), args.begin() + s.num_globals);
  std::int64_t weight = 1;
  if (s.func == AggFunc::Sum) {
    if (args.size() == s.num_globals || !args[s.num_globals].is_int() ||
        args[s.num_globals].as_int() < 0)
      throw Error(ErrorCode::Eval, "#sum element weight must be a non-negative integer: " +
                                       store_.to_string(head));
    weight = args[s.num_globals].as_int();
  }
  std::uint32_t g = group_for(spec, std::move(globals));
  groups_[g].elements.emplace_back(head, weight);
  element_group_[head] = g;
  out.new_elements.emplace_back(g, groups_[g].elements.size() - 1);
}

const std::vector<std::uint32_t>& Grounder::rules_with_head(AtomId a) const {
  static const std::vector<std::uint32_t> kEmpty;
  return a < head_rules_.size() ? head_rules_[a] : kEmpty;
}

std::uint32_t Grounder::group_of_element(AtomId a) const {
  auto it = element_group_.find(a);
  return it == element_group_.end() ? kNone : it->second;
}

std::uint32_t Grounder::group_of_aggregate(AtomId a) const {
  auto it = aggregate_group_.find(a);
  return it == aggregate_group_.end() ? kNone : it->second;
}

std::int64_t Grounder::bound_of_aggregate(AtomId a) const { return aggregate_bound_.at(a); }

bool Grounder::is_closed(AtomId a) {
  AtomKind kind = store_.kind(a);
  if (kind != AtomKind::Program && kind != AtomKind::Element) return false;
  if (closed_.size() <= a) closed_.resize(store_.size(), 0);
  if (closed_[a]) return true;
  PredId p = store_.pred_of(a);
  if (p < head_sources_.size()) {
    for (auto id : head_sources_[p]) {
      const SourceRule& r = src_[id];
      if (!r.closable) return false;
      Binding b{std::vector<Value>(r.num_vars), std::vector<std::uint8_t>(r.num_vars)};
      std::vector<std::uint32_t> trail;
      if (!unify(*r.head, a, b, trail)) continue;
      bool possible = true;
      try {
        for (const auto& c : r.cmps)
          if (!compare(c.op, eval(c.lhs, b), eval(c.rhs, b))) possible = false;
      } catch (const Error&) {
        return false;
      }
      if (!possible) continue;
      if (!emitted_heads_.count((static_cast<std::uint64_t>(id) << 32) | a)) return false;
    }
  }
  closed_[a] = 1;
  return true;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string signed_text(const AtomStore& s, Sign sign, AtomId a) {
  const char* pre = sign == Sign::Pos ? "+" : sign == Sign::Neg ? "-" : "";
  return pre + s.to_string(a);
}

}  // namespace

std::string Grounder::rule_text(const GroundRule& r) const {
  if (r.is_heuristic) return directive_text(directives_[r.directive]);
  std::vector<std::string> pos, neg;
  for (auto a : r.pos) pos.push_back(store_.to_string(a));
  for (auto a : r.neg) neg.push_back("not " + store_.to_string(a));
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  pos.insert(pos.end(), neg.begin(), neg.end());
  std::string s = r.head == kNoAtom ? "" : store_.to_string(r.head);
  if (!pos.empty() || r.head == kNoAtom) {
    s += r.head == kNoAtom ? ":- " : " :- ";
    for (std::size_t i = 0; i < pos.size(); ++i) s += (i ? ", " : "") + pos[i];
  }
  return s + ".";
}

std::string Grounder::directive_text(const GroundDirective& d) const {
  std::string s = "_h(" + store_.to_string(d.head) + ", " + std::to_string(d.weight) + ", " +
                  std::to_string(d.level) + ", " + (d.head_sign == Sign::Neg ? "false" : "true") +
                  ")";
  std::vector<std::string> body;
  for (const auto& c : d.pos) body.push_back(signed_text(store_, c.sign, c.atom));
  for (const auto& c : d.neg) body.push_back("not " + signed_text(store_, c.sign, c.atom));
  for (const auto& p : d.neg_patterns) {
    std::string t = std::string(p.sign == Sign::Pos ? "+" : p.sign == Sign::Neg ? "-" : "") +
                    store_.pred_name(p.pred) + "(";
    for (std::size_t i = 0; i < p.args.size(); ++i)
      t += (i ? "," : "") + (p.args[i] ? p.args[i]->to_string() : std::string("_"));
    body.push_back("not " + t + ")");
  }
  if (!body.empty()) {
    s += " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) s += (i ? ", " : "") + body[i];
  }
  return s + ".";
}

// ---------------------------------------------------------------------------

FullGrounding::FullGrounding(const Program& normalized, GrounderOptions opts)
    : g_(normalized, opts) {
  GroundingDelta d = g_.start();
  for (;;) {
    std::vector<AtomId> known, assigned;
    for (auto id : d.rules) {
      const GroundRule& r = g_.rules()[id];
      if (r.head != kNoAtom) known.push_back(r.head);
    }
    for (AtomId a = d.first_new_atom; a < g_.store().size(); ++a)
      if (g_.store().kind(a) != AtomKind::Body) assigned.push_back(a);
    known.insert(known.end(), d.new_aggregates.begin(), d.new_aggregates.end());
    bool fresh = false;
    for (auto a : known) fresh |= !g_.is_known(a);
    for (auto a : assigned) fresh |= !g_.is_assigned_ever(a);
    if (!fresh) break;
    d = g_.ground_new(known, assigned);
  }
}

}  // namespace lazyheur
