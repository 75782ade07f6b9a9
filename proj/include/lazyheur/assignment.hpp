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

// Three-valued partial assignment (true / false / must-be-true) kept as a
// trail with decision levels.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lazyheur/grounder.hpp"

namespace lazyheur {

enum class Truth : std::uint8_t { Unassigned, False, True, Must };

// "T", "F", "M" or "U".
const char* to_string(Truth t);

enum class AssignResult : std::uint8_t {
  Ok,         // unassigned atom received a value
  Promoted,   // M became T
  Unchanged,  // the atom already had this value (or T when M was requested)
  Conflict,   // illegal transition; the assignment was left untouched
};

struct Reason {
  enum class Kind : std::uint8_t { Decision, Flip, Fact, Rule, Body, Constraint, Support, Aggregate };
  Kind kind = Kind::Decision;
  std::uint32_t id = 0;
  std::string tag() const;
};

struct TrailEntry {
  AtomId atom;
  Truth old_value;
  Truth new_value;
  Reason reason;
  std::uint32_t level;
  std::uint32_t old_level;  // level of the previous value (for promotions)
};

// Signed atom projection: plain = {a | Ma or Ta}, pos = {+a | Ta}, neg = {-a | Fa}.
struct SignedProjection {
  std::vector<AtomId> plain, pos, neg;  // each sorted
  bool has(Sign s, AtomId a) const;
};

class PartialAssignment {
 public:
  void ensure_size(std::size_t n);
  std::size_t size() const { return values_.size(); }

  Truth value(AtomId a) const { return a < values_.size() ? values_[a] : Truth::Unassigned; }
  // Level at which the current value was set (a promotion counts as a change).
  std::uint32_t level_of(AtomId a) const { return a < levels_.size() ? levels_[a] : 0; }
  std::uint32_t level() const { return level_; }

  AssignResult assign(AtomId a, Truth v, Reason reason);
  void new_level() { ++level_; }
  // Undo every trail entry above `level`; returns the atoms whose value changed.
  std::vector<AtomId> backtrack_to(std::uint32_t level);

  bool sat_plain(AtomId a) const { return value(a) == Truth::True || value(a) == Truth::Must; }
  bool sat_pos(AtomId a) const { return value(a) == Truth::True; }
  bool sat_neg(AtomId a) const { return value(a) == Truth::False; }

  SignedProjection project() const;
  const std::vector<TrailEntry>& trail() const { return trail_; }

 private:
  std::vector<Truth> values_;
  std::vector<std::uint32_t> levels_;
  std::vector<TrailEntry> trail_;
  std::uint32_t level_ = 0;
};

}  // namespace lazyheur
