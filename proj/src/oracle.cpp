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

#include "lazyheur/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "lazyheur/error.hpp"

namespace lazyheur {

OracleProgram OracleProgram::from_grounding(const Grounder& g) {
  OracleProgram p;
  const AtomStore& store = g.store();
  std::unordered_map<AtomId, std::uint32_t> ids, agg_ids;
  auto atom_id = [&](AtomId a) {
    auto [it, fresh] = ids.emplace(a, static_cast<std::uint32_t>(p.atoms_.size()));
    if (fresh) {
      p.atoms_.push_back(store.to_string(a));
      p.internal_.push_back(store.is_internal(a));
    }
    return it->second;
  };
  std::function<Body(const GroundRule&)> body_of;
  auto agg_id = [&](AtomId a) {
    auto it = agg_ids.find(a);
    if (it != agg_ids.end()) return it->second;
    Aggregate agg;
    agg.bound = g.bound_of_aggregate(a);
    for (auto [e, w] : g.groups()[g.group_of_aggregate(a)].elements) {
      Element el;
      el.weight = w;
      for (auto r : g.rules_with_head(e)) el.conditions.push_back(body_of(g.rules()[r]));
      agg.elements.push_back(std::move(el));
    }
    auto id = static_cast<std::uint32_t>(p.aggs_.size());
    p.aggs_.push_back(std::move(agg));
    agg_ids.emplace(a, id);
    return id;
  };
  body_of = [&](const GroundRule& r) {
    Body b;
    for (AtomId x : r.pos) {
      if (store.kind(x) == AtomKind::Aggregate) b.aggs.push_back(agg_id(x));
      else b.pos.push_back(atom_id(x));
    }
    for (AtomId x : r.neg) b.neg.push_back(atom_id(x));
    return b;
  };
  for (const auto& r : g.rules()) {
    if (r.is_heuristic) continue;
    if (!r.is_constraint && store.kind(r.head) != AtomKind::Program) continue;
    Rule o;
    o.head = r.is_constraint ? std::int64_t{-1} : std::int64_t{atom_id(r.head)};
    o.body = body_of(r);
    p.rules_.push_back(std::move(o));
  }
  return p;
}

OracleProgram OracleProgram::from_program(const Program& normalized, std::size_t cap) {
  FullGrounding fg(normalized, GrounderOptions{cap});
  return from_grounding(fg.grounder());
}

std::int64_t OracleProgram::atom(const std::string& text) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), text);
  return it == atoms_.end() ? -1 : it - atoms_.begin();
}

bool OracleProgram::holds(const Model& m, const Aggregate& a) const {
  std::int64_t sum = 0;
  for (const auto& e : a.elements)
    if (std::any_of(e.conditions.begin(), e.conditions.end(),
                    [&](const Body& c) { return satisfies(m, c); }))
      sum += e.weight;
  return sum >= a.bound;
}

bool OracleProgram::satisfies(const Model& m, const Body& b) const {
  for (auto x : b.pos)
    if (!m[x]) return false;
  for (auto x : b.neg)
    if (m[x]) return false;
  for (auto x : b.aggs)
    if (!holds(m, aggs_[x])) return false;
  return true;
}

bool OracleProgram::is_model(const Model& m) const {
  for (const auto& r : rules_)
    if (satisfies(m, r.body) && (r.head < 0 || !m[r.head])) return false;
  return true;
}

bool OracleProgram::is_answer_set(const Model& m) const {
  if (!is_model(m)) return false;
  // FLP reduct: rules whose body holds in m
  std::vector<const Rule*> reduct;
  for (const auto& r : rules_)
    if (satisfies(m, r.body)) reduct.push_back(&r);
  std::vector<std::uint32_t> members;
  std::vector<bool> fact(m.size(), false);
  for (const auto& r : rules_)
    if (r.head >= 0 && r.body.pos.empty() && r.body.neg.empty() && r.body.aggs.empty())
      fact[r.head] = true;
  // facts belong to every model of the reduct, so only the rest may be dropped
  for (std::uint32_t i = 0; i < m.size(); ++i)
    if (m[i] && !fact[i]) members.push_back(i);
  if (members.size() > 30) throw Error(ErrorCode::TooLarge, "candidate too large for the oracle");
  const std::uint64_t full = (1ull << members.size()) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    Model n = m;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (!(mask >> i & 1)) n[members[i]] = false;
    bool model = true;
    for (const Rule* r : reduct)
      if (satisfies(n, r->body) && (r->head < 0 || !n[r->head])) {
        model = false;
        break;
      }
    if (model) return false;
  }
  return true;
}

bool OracleProgram::is_answer_set_gl(const Model& m) const {
  if (has_aggregates())
    throw Error(ErrorCode::Unsupported, "the reduct cross-check needs an aggregate-free program");
  Model least(m.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules_) {
      if (r.head < 0 || least[r.head]) continue;
      bool fires = std::all_of(r.body.neg.begin(), r.body.neg.end(), [&](auto x) { return !m[x]; }) &&
                   std::all_of(r.body.pos.begin(), r.body.pos.end(), [&](auto x) { return least[x]; });
      if (fires) least[r.head] = changed = true;
    }
  }
  if (least != m) return false;
  for (const auto& r : rules_)
    if (r.head < 0 && satisfies(m, r.body)) return false;
  return true;
}

std::vector<std::string> OracleProgram::visible(const Model& m) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] && !internal_[i]) out.push_back(atoms_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool OracleProgram::is_answer_set(const std::set<std::string>& visible_atoms) const {
  for (const auto& a : visible_atoms)
    if (atom(a) < 0) return false;
  // internal atoms are determined by the visible ones up to the choice
  // complements; try every completion of the internal part
  std::vector<std::uint32_t> hidden;
  for (std::uint32_t i = 0; i < atoms_.size(); ++i)
    if (internal_[i]) hidden.push_back(i);
  if (hidden.size() > 20) throw Error(ErrorCode::TooLarge, "too many internal atoms");
  for (std::uint64_t mask = 0; mask < (1ull << hidden.size()); ++mask) {
    Model m(atoms_.size(), false);
    for (std::uint32_t i = 0; i < atoms_.size(); ++i) m[i] = visible_atoms.count(atoms_[i]) > 0;
    for (std::size_t i = 0; i < hidden.size(); ++i) m[hidden[i]] = mask >> i & 1;
    if (is_answer_set(m)) return true;
  }
  return false;
}

std::vector<std::vector<std::string>> OracleProgram::enumerate(std::size_t max_atoms) const {
  Model base(atoms_.size(), false);
  std::vector<bool> is_head(atoms_.size(), false);
  for (const auto& r : rules_) {
    if (r.head < 0) continue;
    is_head[r.head] = true;
    if (r.body.pos.empty() && r.body.neg.empty() && r.body.aggs.empty()) base[r.head] = true;
  }
  std::vector<std::uint32_t> free;
  for (std::uint32_t i = 0; i < atoms_.size(); ++i)
    if (is_head[i] && !base[i]) free.push_back(i);
  if (free.size() > max_atoms)
    throw Error(ErrorCode::TooLarge, "the oracle supports at most " + std::to_string(max_atoms) +
                                         " non-fact atoms, got " + std::to_string(free.size()));
  std::set<std::vector<std::string>> found;
  for (std::uint64_t mask = 0; mask < (1ull << free.size()); ++mask) {
    Model m = base;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) m[free[i]] = true;
    if (is_answer_set(m)) found.insert(visible(m));
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<std::string>> enumerate_answer_sets(const Program& normalized,
                                                            const OracleOptions& opts) {
  return OracleProgram::from_program(normalized, opts.cap).enumerate(opts.max_atoms);
}

}  // namespace lazyheur
