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

#include "lazyheur/assignment.hpp"

#include <algorithm>

namespace lazyheur {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::False: return "F";
    case Truth::True: return "T";
    case Truth::Must: return "M";
    case Truth::Unassigned: break;
  }
  return "U";
}

std::string Reason::tag() const {
  switch (kind) {
    case Kind::Decision: return "decision";
    case Kind::Flip: return "flip";
    case Kind::Fact: return "fact";
    case Kind::Rule: return "rule:" + std::to_string(id);
    case Kind::Body: return "body:" + std::to_string(id);
    case Kind::Constraint: return "constraint:" + std::to_string(id);
    case Kind::Support: return "support";
    case Kind::Aggregate: return "aggregate:" + std::to_string(id);
  }
  return "?";
}

bool SignedProjection::has(Sign s, AtomId a) const {
  const auto& v = s == Sign::Pos ? pos : s == Sign::Neg ? neg : plain;
  return std::binary_search(v.begin(), v.end(), a);
}

void PartialAssignment::ensure_size(std::size_t n) {
  if (values_.size() < n) {
    values_.resize(n, Truth::Unassigned);
    levels_.resize(n, 0);
  }
}

AssignResult PartialAssignment::assign(AtomId a, Truth v, Reason reason) {
  ensure_size(static_cast<std::size_t>(a) + 1);
  Truth old = values_[a];
  if (old == v) return AssignResult::Unchanged;
  AssignResult res = AssignResult::Ok;
  switch (old) {
    case Truth::Unassigned: break;
    case Truth::Must:
      if (v != Truth::True) return AssignResult::Conflict;
      res = AssignResult::Promoted;
      break;
    case Truth::True:
      if (v == Truth::Must) return AssignResult::Unchanged;
      return AssignResult::Conflict;
    case Truth::False: return AssignResult::Conflict;
  }
  trail_.push_back({a, old, v, reason, level_, levels_[a]});
  values_[a] = v;
  levels_[a] = level_;
  return res;
}

std::vector<AtomId> PartialAssignment::backtrack_to(std::uint32_t level) {
  std::vector<AtomId> changed;
  while (!trail_.empty() && trail_.back().level > level) {
    const TrailEntry& e = trail_.back();
    values_[e.atom] = e.old_value;
    levels_[e.atom] = e.old_level;
    changed.push_back(e.atom);
    trail_.pop_back();
  }
  level_ = std::min(level_, level);
  return changed;
}

SignedProjection PartialAssignment::project() const {
  SignedProjection p;
  for (AtomId a = 0; a < values_.size(); ++a) {
    switch (values_[a]) {
      case Truth::True: p.pos.push_back(a); [[fallthrough]];
      case Truth::Must: p.plain.push_back(a); break;
      case Truth::False: p.neg.push_back(a); break;
      case Truth::Unassigned: break;
    }
  }
  return p;
}

}  // namespace lazyheur
