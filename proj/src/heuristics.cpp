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

#include "lazyheur/heuristics.hpp"

#include <algorithm>

namespace lazyheur {

bool satisfies_literal(Truth v, Sign sign, bool negated) {
  bool sat = false;
  switch (sign) {
    case Sign::Plain: sat = v == Truth::True || v == Truth::Must; break;
    case Sign::Pos: sat = v == Truth::True; break;
    case Sign::Neg: sat = v == Truth::False; break;
  }
  return sat != negated;
}

namespace {

bool pattern_fits(const AtomStore& store, const GroundPattern& p, AtomId a) {
  auto args = store.args(a);
  for (std::size_t i = 0; i < p.args.size(); ++i)
    if (p.args[i] && !(*p.args[i] == args[i])) return false;
  return true;
}

template <typename Sat>
bool condition_with(const AtomStore& store, const GroundDirective& d, Sat sat) {
  for (const auto& c : d.pos)
    if (!sat(c.sign, c.atom)) return false;
  for (const auto& c : d.neg)
    if (sat(c.sign, c.atom)) return false;
  for (const auto& p : d.neg_patterns)
    for (AtomId a : store.atoms_of(p.pred))
      if (pattern_fits(store, p, a) && sat(p.sign, a)) return false;
  return true;
}

}  // namespace

bool pattern_matched(const PartialAssignment& a, const AtomStore& store, const GroundPattern& p) {
  for (AtomId x : store.atoms_of(p.pred))
    if (pattern_fits(store, p, x) && satisfies_literal(a.value(x), p.sign, false)) return true;
  return false;
}

bool condition_satisfied(const PartialAssignment& a, const AtomStore& store,
                         const GroundDirective& d) {
  return condition_with(store, d, [&](Sign s, AtomId x) {
    return satisfies_literal(a.value(x), s, false);
  });
}

bool condition_satisfied(const SignedProjection& p, const AtomStore& store,
                         const GroundDirective& d) {
  return condition_with(store, d, [&](Sign s, AtomId x) { return p.has(s, x); });
}

bool is_applicable(const PartialAssignment& a, const AtomStore& store, const GroundDirective& d) {
  Truth h = a.value(d.head);
  return h != Truth::True && h != Truth::False && condition_satisfied(a, store, d);
}

std::vector<std::uint32_t> maxpriority(std::span<const Priority> applicable) {
  if (applicable.empty()) return {};
  std::int64_t max_level = applicable[0].level;
  for (const auto& p : applicable) max_level = std::max(max_level, p.level);
  std::vector<Priority> at_level;
  for (const auto& p : applicable)
    if (p.level == max_level) at_level.push_back(p);
  std::int64_t max_weight = at_level[0].weight;
  for (const auto& p : at_level) max_weight = std::max(max_weight, p.weight);
  std::vector<std::uint32_t> out;
  for (const auto& p : at_level)
    if (p.weight == max_weight) out.push_back(p.id);
  return out;
}

HeuristicPool::HeuristicPool(std::optional<std::uint64_t> seed) {
  if (seed) rng_.emplace(*seed);
}

void HeuristicPool::add(const GroundDirective& d) {
  heap_.push_back({d.level, d.weight, d.id});
  std::push_heap(heap_.begin(), heap_.end());
  ++count_;
}

std::optional<std::uint32_t> HeuristicPool::blocker(const PartialAssignment& a,
                                                    const AtomStore& store,
                                                    const GroundDirective& d) {
  std::optional<std::uint32_t> lvl;
  auto note = [&](AtomId x) {
    std::uint32_t l = a.level_of(x);
    if (!lvl || l < *lvl) lvl = l;
  };
  Truth h = a.value(d.head);
  if (h == Truth::True || h == Truth::False) note(d.head);
  for (const auto& c : d.pos) {
    Truth v = a.value(c.atom);
    // a false atom never satisfies a or +a again; a true/must one never satisfies -a
    bool dead = c.sign == Sign::Neg ? (v == Truth::True || v == Truth::Must) : v == Truth::False;
    if (dead) note(c.atom);
  }
  for (const auto& c : d.neg)
    if (satisfies_literal(a.value(c.atom), c.sign, false)) note(c.atom);
  for (const auto& p : d.neg_patterns)
    for (AtomId x : store.atoms_of(p.pred))
      if (pattern_fits(store, p, x) && satisfies_literal(a.value(x), p.sign, false)) note(x);
  return lvl;
}

std::optional<std::uint32_t> HeuristicPool::select(const PartialAssignment& a,
                                                   const AtomStore& store,
                                                   const std::vector<GroundDirective>& dirs,
                                                   const std::unordered_set<std::uint32_t>& skip) {
  for (const auto& e : deferred_) {
    heap_.push_back(e);
    std::push_heap(heap_.begin(), heap_.end());
  }
  deferred_.clear();

  std::vector<Entry> chosen;
  while (!heap_.empty()) {
    Entry top = heap_.front();
    if (!chosen.empty() && (top.level != chosen[0].level || top.weight != chosen[0].weight)) break;
    std::pop_heap(heap_.begin(), heap_.end());
    heap_.pop_back();
    const GroundDirective& d = dirs[top.id];
    if (skip.count(top.id)) {
      deferred_.push_back(top);
    } else if (is_applicable(a, store, d)) {
      chosen.push_back(top);
      if (!rng_) break;
    } else if (auto lvl = blocker(a, store, d)) {
      stashed_[*lvl].push_back(top);
    } else {
      deferred_.push_back(top);
    }
  }
  if (chosen.empty()) return std::nullopt;
  std::size_t pick = 0;
  if (rng_ && chosen.size() > 1)
    pick = std::uniform_int_distribution<std::size_t>(0, chosen.size() - 1)(*rng_);
  std::uint32_t id = chosen[pick].id;
  for (const auto& e : chosen) {
    heap_.push_back(e);
    std::push_heap(heap_.begin(), heap_.end());
  }
  return id;
}

void HeuristicPool::on_backtrack(std::uint32_t level) {
  auto it = stashed_.upper_bound(level);
  for (auto j = it; j != stashed_.end(); ++j)
    for (const auto& e : j->second) {
      heap_.push_back(e);
      std::push_heap(heap_.begin(), heap_.end());
    }
  stashed_.erase(it, stashed_.end());
}

}  // namespace lazyheur
