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

#include "lazyheur/solver.hpp"

#include <algorithm>

#include "lazyheur/error.hpp"

namespace lazyheur {

namespace {

enum { kDecided = 0, kNoDerivingRule = 1, kAmbiguousNegative = 2 };

template <typename V>
void grow(std::vector<V>& v, std::size_t n) {
  if (v.size() < n) v.resize(n);
}

}  // namespace

Solver::Solver(const Program& normalized, SolveOptions opts)
    : opts_(opts), g_(normalized, GrounderOptions{opts.cap}), pool_(opts.seed) {}

void Solver::warn(const std::string& w) {
  if (warned_.insert(w).second) warnings_.push_back(w);
}

bool Solver::set(AtomId atom, Truth v, Reason why) {
  AssignResult r = a_.assign(atom, v, why);
  if (r == AssignResult::Conflict) return false;
  if (r == AssignResult::Unchanged) return true;
  if (trace_) {
    emit("ASSIGN " + g_.store().to_string(atom) + "=" + to_string(a_.value(atom)) + " @" +
         std::to_string(a_.level()) + " reason=" + why.tag());
  }
  queue_.push_back(atom);
  if (g_.store().kind(atom) != AtomKind::Body) feed_.push_back(atom);
  return true;
}

// ---------------------------------------------------------------------------
// Propagation

bool Solver::check_body(std::uint32_t b) {
  const GroundBody& body = g_.bodies()[b];
  bool any_false = false, all_sat = true;
  std::size_t undecided = 0;
  AtomId last = kNoAtom;
  bool last_pos = true;
  for (AtomId p : body.pos) {
    Truth v = a_.value(p);
    if (v == Truth::False) any_false = true;
    if (v == Truth::Unassigned) {
      all_sat = false;
      ++undecided;
      last = p;
      last_pos = true;
    }
  }
  for (AtomId n : body.neg) {
    Truth v = a_.value(n);
    if (v == Truth::True || v == Truth::Must) any_false = true;
    if (v == Truth::Unassigned) {
      all_sat = false;
      ++undecided;
      last = n;
      last_pos = false;
    }
  }
  Reason why{Reason::Kind::Body, b};
  if (any_false) return set(body.beta, Truth::False, why);
  if (all_sat && !set(body.beta, Truth::True, why)) return false;

  Truth beta = a_.value(body.beta);
  if (beta == Truth::True) {
    bool all_true = true;
    for (AtomId p : body.pos) {
      if (!set(p, Truth::Must, why)) return false;
      all_true &= a_.value(p) == Truth::True;
    }
    for (AtomId n : body.neg)
      if (!set(n, Truth::False, why)) return false;
    for (auto r : body.rules)
      if (!set(g_.rules()[r].head, all_true ? Truth::True : Truth::Must, {Reason::Kind::Rule, r}))
        return false;
  } else if (beta == Truth::False && undecided == 1) {
    return set(last, last_pos ? Truth::False : Truth::Must, why);
  }
  return true;
}

bool Solver::check_constraint(std::uint32_t id) {
  const GroundRule& r = g_.rules()[id];
  std::size_t undecided = 0;
  AtomId last = kNoAtom;
  bool last_pos = true;
  for (AtomId p : r.pos) {
    Truth v = a_.value(p);
    if (v == Truth::False) return true;
    if (v == Truth::Unassigned) {
      ++undecided;
      last = p;
      last_pos = true;
    }
  }
  for (AtomId n : r.neg) {
    Truth v = a_.value(n);
    if (v == Truth::True || v == Truth::Must) return true;
    if (v == Truth::Unassigned) {
      ++undecided;
      last = n;
      last_pos = false;
    }
  }
  if (undecided == 0) return false;
  if (undecided == 1)
    return set(last, last_pos ? Truth::False : Truth::Must, {Reason::Kind::Constraint, id});
  return true;
}

bool Solver::check_group(std::uint32_t gid) {
  const AggGroup& grp = g_.groups()[gid];
  std::int64_t sum_t = 0, sum_tm = 0;
  for (auto [e, w] : grp.elements) {
    Truth v = a_.value(e);
    if (v == Truth::True) sum_t += w;
    if (v == Truth::True || v == Truth::Must) sum_tm += w;
  }
  Reason why{Reason::Kind::Aggregate, gid};
  for (auto [k, agg] : grp.bounds) {
    if (sum_t >= k) {
      if (!set(agg, Truth::True, why)) return false;
    } else if (sum_tm >= k) {
      if (!set(agg, Truth::Must, why)) return false;
    } else if (a_.value(agg) == Truth::False) {
      for (auto [e, w] : grp.elements)
        if (a_.value(e) == Truth::Unassigned && sum_tm + w >= k && !set(e, Truth::False, why))
          return false;
    }
  }
  return true;
}

bool Solver::check_support(AtomId h) {
  Truth v = a_.value(h);
  if (v == Truth::True || v == Truth::False) return true;
  AtomKind kind = g_.store().kind(h);
  if (kind != AtomKind::Program && kind != AtomKind::Element) return true;
  if (!g_.is_closed(h)) return true;
  std::size_t open = 0;
  AtomId candidate = kNoAtom;
  for (auto r : g_.rules_with_head(h)) {
    AtomId beta = g_.bodies()[g_.rules()[r].body].beta;
    if (a_.value(beta) == Truth::False) continue;
    if (beta != candidate) ++open;
    candidate = beta;
    if (open > 1) return true;
  }
  if (open == 0) return set(h, Truth::False, {Reason::Kind::Support, 0});
  if (v == Truth::Must) return set(candidate, Truth::True, {Reason::Kind::Support, 0});
  return true;
}

bool Solver::process(AtomId x) {
  if (x < body_watch_.size())
    for (auto b : body_watch_[x])
      if (!check_body(b)) return false;
  if (x < beta_body_.size() && beta_body_[x] != kNone && !check_body(beta_body_[x])) return false;
  if (x < cons_watch_.size())
    for (auto c : cons_watch_[x])
      if (!check_constraint(c)) return false;
  AtomKind kind = g_.store().kind(x);
  if (kind == AtomKind::Element && !check_group(g_.group_of_element(x))) return false;
  if (kind == AtomKind::Aggregate && !check_group(g_.group_of_aggregate(x))) return false;

  Truth v = a_.value(x);
  if (v == Truth::False) {
    for (auto r : g_.rules_with_head(x))
      if (!set(g_.bodies()[g_.rules()[r].body].beta, Truth::False, {Reason::Kind::Rule, r}))
        return false;
    if (kind == AtomKind::Body)
      for (auto r : g_.bodies()[beta_body_[x]].rules)
        if (!check_support(g_.rules()[r].head)) return false;
  }
  if (v == Truth::Must && !check_support(x)) return false;
  return true;
}

bool Solver::integrate(const GroundingDelta& d) {
  const auto& store = g_.store();
  a_.ensure_size(store.size());
  grow(body_watch_, store.size());
  grow(cons_watch_, store.size());
  if (beta_body_.size() < store.size()) beta_body_.resize(store.size(), kNone);

  for (auto b : d.new_bodies) {
    const GroundBody& body = g_.bodies()[b];
    beta_body_[body.beta] = b;
    for (AtomId p : body.pos) body_watch_[p].push_back(b);
    for (AtomId n : body.neg) body_watch_[n].push_back(b);
  }
  using K = Recheck::Kind;
  std::size_t first = rechecks_.size();
  auto log = [&](K kind, std::uint32_t id) { rechecks_.push_back({a_.level(), kind, id}); };
  for (auto id : d.rules) {
    const GroundRule& r = g_.rules()[id];
    if (r.is_constraint) {
      constraints_.push_back(id);
      for (AtomId p : r.pos) cons_watch_[p].push_back(id);
      for (AtomId n : r.neg) cons_watch_[n].push_back(id);
      log(K::Constraint, id);
    } else {
      log(K::Body, r.body);
    }
  }
  std::vector<std::uint32_t> groups;
  for (auto agg : d.new_aggregates) groups.push_back(g_.group_of_aggregate(agg));
  for (auto [gid, idx] : d.new_elements) groups.push_back(gid);
  std::sort(groups.begin(), groups.end());
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
  for (auto gid : groups) log(K::Group, gid);
  for (auto id : d.rules)
    if (!g_.rules()[id].is_constraint) log(K::Support, g_.rules()[id].head);
  for (AtomId a = d.first_new_atom; a < store.size(); ++a) log(K::Support, a);

  for (auto id : d.directives)
    if (opts_.heuristics) pool_.add(g_.directives()[id]);
  stats_.ground_directives += d.directives.size();
  stats_.ground_rules += d.rules.size();

  for (std::size_t i = first; i < rechecks_.size(); ++i)
    if (!run_check(rechecks_[i])) return false;
  return true;
}

bool Solver::run_check(const Recheck& c) {
  switch (c.kind) {
    case Recheck::Kind::Body: return check_body(c.id);
    case Recheck::Kind::Constraint: return check_constraint(c.id);
    case Recheck::Kind::Group: return check_group(c.id);
    case Recheck::Kind::Support: return check_support(c.id);
  }
  return true;
}

bool Solver::propagate() {
  for (const auto& c : pending_)
    if (!run_check(c)) {
      pending_.clear();
      return false;
    }
  pending_.clear();
  for (;;) {
    while (queue_head_ < queue_.size())
      if (!process(queue_[queue_head_++])) return false;
    queue_.clear();
    queue_head_ = 0;

    std::vector<AtomId> known, assigned;
    for (AtomId x : feed_) {
      if (a_.value(x) == Truth::Unassigned) continue;
      if (!g_.is_assigned_ever(x)) assigned.push_back(x);
      if (a_.sat_plain(x) && !g_.is_known(x)) known.push_back(x);
    }
    feed_.clear();
    if (known.empty() && assigned.empty()) return true;
    if (!integrate(g_.ground_new(known, assigned))) return false;
  }
}

// ---------------------------------------------------------------------------
// Decisions

int Solver::decide_from_directive(std::uint32_t id) {
  const GroundDirective& d = g_.directives()[id];
  const auto& rules = g_.rules_with_head(d.head);
  AtomId beta = kNoAtom;
  bool value = d.head_sign != Sign::Neg;
  if (value) {
    for (auto r : rules) {
      const GroundBody& body = g_.bodies()[g_.rules()[r].body];
      if (a_.value(body.beta) != Truth::Unassigned) continue;
      bool applicable = std::all_of(body.pos.begin(), body.pos.end(),
                                    [&](AtomId p) { return a_.sat_plain(p); }) &&
                        std::none_of(body.neg.begin(), body.neg.end(),
                                     [&](AtomId n) { return a_.sat_plain(n); });
      if (applicable) {
        beta = body.beta;
        break;
      }
    }
    if (beta == kNoAtom) return kNoDerivingRule;
  } else {
    if (rules.empty()) return kNoDerivingRule;
    if (rules.size() > 1) return kAmbiguousNegative;
    beta = g_.bodies()[g_.rules()[rules[0]].body].beta;
    if (a_.value(beta) != Truth::Unassigned) return kNoDerivingRule;
  }
  ++stats_.decisions;
  ++stats_.heuristic_decisions;
  emit("DECIDE " + g_.store().to_string(d.head) + "=" + (value ? "T" : "F") +
       " dir=" + std::to_string(id) + " w=" + std::to_string(d.weight) +
       " l=" + std::to_string(d.level));
  a_.new_level();
  stack_.push_back({beta, value, false});
  set(beta, value ? Truth::True : Truth::False, {Reason::Kind::Decision, id});
  return kDecided;
}

bool Solver::decide() {
  if (opts_.heuristics) {
    std::unordered_set<std::uint32_t> skip;
    while (auto id = pool_.select(a_, g_.store(), g_.directives(), skip)) {
      int r = decide_from_directive(*id);
      if (r == kDecided) return true;
      const std::string head = g_.store().to_string(g_.directives()[*id].head);
      warn(r == kNoDerivingRule
               ? "E_NO_DERIVING_RULE: no applicable rule derives " + head + " (directive " +
                     std::to_string(*id) + " skipped)"
               : "E_AMBIGUOUS_NEGATIVE: " + head + " has several deriving rules (directive " +
                     std::to_string(*id) + " skipped)");
      skip.insert(*id);
    }
  }
  for (std::uint32_t b = 0; b < g_.bodies().size(); ++b) {
    const GroundBody& body = g_.bodies()[b];
    if (a_.value(body.beta) != Truth::Unassigned) continue;
    if (!std::all_of(body.pos.begin(), body.pos.end(), [&](AtomId p) { return a_.sat_plain(p); }))
      continue;
    if (std::any_of(body.neg.begin(), body.neg.end(), [&](AtomId n) { return a_.sat_plain(n); }))
      continue;
    ++stats_.decisions;
    emit("DECIDE " + g_.store().to_string(body.beta) + "=T dir=fallback w=0 l=0");
    a_.new_level();
    stack_.push_back({body.beta, true, false});
    set(body.beta, Truth::True, {Reason::Kind::Decision, b});
    return true;
  }
  return false;
}

bool Solver::resolve() {
  ++stats_.backtracks;
  while (!stack_.empty() && stack_.back().flipped) stack_.pop_back();
  if (stack_.empty()) return false;
  Decision& top = stack_.back();
  auto level = static_cast<std::uint32_t>(stack_.size());
  a_.backtrack_to(level - 1);
  pool_.on_backtrack(level - 1);
  pending_.clear();
  for (auto& c : rechecks_)
    if (c.level >= level) {
      c.level = level;
      pending_.push_back(c);
    }
  queue_.clear();
  queue_head_ = 0;
  feed_.clear();
  a_.new_level();
  top.value = !top.value;
  top.flipped = true;
  set(top.beta, top.value ? Truth::True : Truth::False, {Reason::Kind::Flip, 0});
  return true;
}

// ---------------------------------------------------------------------------
// Completion

bool Solver::complete() const {
  auto is_true = [&](AtomId x) { return a_.value(x) == Truth::True; };
  for (AtomId x = 0; x < a_.size(); ++x)
    if (a_.value(x) == Truth::Must) return false;
  for (const auto& body : g_.bodies()) {
    bool holds = std::all_of(body.pos.begin(), body.pos.end(), is_true) &&
                 std::none_of(body.neg.begin(), body.neg.end(), is_true);
    if (holds != is_true(body.beta)) return false;
    if (holds)
      for (auto r : body.rules)
        if (!is_true(g_.rules()[r].head)) return false;
  }
  for (auto id : constraints_) {
    const GroundRule& r = g_.rules()[id];
    if (std::all_of(r.pos.begin(), r.pos.end(), is_true) &&
        std::none_of(r.neg.begin(), r.neg.end(), is_true))
      return false;
  }
  for (const auto& grp : g_.groups()) {
    std::int64_t sum = 0;
    for (auto [e, w] : grp.elements)
      if (is_true(e)) sum += w;
    for (auto [k, agg] : grp.bounds)
      if ((sum >= k) != is_true(agg)) return false;
  }
  return true;
}

std::vector<std::string> Solver::answer_set() const {
  std::vector<std::string> out;
  const auto& store = g_.store();
  for (AtomId x = 0; x < a_.size(); ++x)
    if (a_.value(x) == Truth::True && !store.is_internal(x)) out.push_back(store.to_string(x));
  std::sort(out.begin(), out.end());
  return out;
}

SolveResult Solver::run(const ModelCallback& on_model, const TraceCallback& trace) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  trace_ = trace;
  SolveResult res;
  auto finish = [&]() {
    stats_.wall_time = std::chrono::duration<double>(Clock::now() - t0).count();
    res.stats = stats_;
    res.warnings = warnings_;
    return res;
  };

  bool ok = integrate(g_.start());
  for (std::uint64_t iter = 0;; ++iter) {
    if (opts_.time_limit > 0 && (iter & 63) == 0 &&
        std::chrono::duration<double>(Clock::now() - t0).count() > opts_.time_limit) {
      res.timed_out = true;
      return finish();
    }
    if (ok) ok = propagate();
    if (!ok) {
      if (!resolve()) break;
      ok = true;
      continue;
    }
    if (decide()) continue;
    if (complete()) {
      ++res.models;
      bool more = !on_model || on_model(answer_set());
      if (!more || (opts_.models != 0 && res.models >= opts_.models)) return finish();
    }
    if (!resolve()) break;
  }
  res.exhausted = true;
  return finish();
}

SolveResult solve(const Program& normalized, const SolveOptions& opts,
                  const ModelCallback& on_model, const TraceCallback& trace) {
  Solver s(normalized, opts);
  return s.run(on_model, trace);
}

std::string format_answer_set(const std::vector<std::string>& atoms) {
  std::string s = "{";
  for (std::size_t i = 0; i < atoms.size(); ++i) s += (i ? ", " : "") + atoms[i];
  return s + "}";
}

}  // namespace lazyheur
