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

// Evaluation of heuristic directives over partial assignments and the
// priority pool used to pick the next one.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <unordered_set>
#include <vector>

#include "lazyheur/assignment.hpp"
#include "lazyheur/grounder.hpp"

namespace lazyheur {

// Satisfaction of a (possibly default-negated) signed heuristic literal by an
// atom with truth value `v`.
bool satisfies_literal(Truth v, Sign sign, bool negated);

// Whether some atom matching `p` satisfies the (non-negated) signed literal.
bool pattern_matched(const PartialAssignment& a, const AtomStore& store, const GroundPattern& p);

bool condition_satisfied(const PartialAssignment& a, const AtomStore& store,
                         const GroundDirective& d);
// Set formulation: c+ is a subset of A± and c- is disjoint from A±.
bool condition_satisfied(const SignedProjection& p, const AtomStore& store,
                         const GroundDirective& d);

// Condition satisfied and the head atom is neither true nor false.
bool is_applicable(const PartialAssignment& a, const AtomStore& store, const GroundDirective& d);

struct Priority {
  std::int64_t level = 0;
  std::int64_t weight = 0;
  std::uint32_t id = 0;
};

// Straightforward reference: ids of the directives with maximal level, and
// among those maximal weight.
std::vector<std::uint32_t> maxpriority(std::span<const Priority> applicable);

class HeuristicPool {
 public:
  explicit HeuristicPool(std::optional<std::uint64_t> seed = std::nullopt);

  void add(const GroundDirective& d);
  std::size_t size() const { return count_; }

  // Applicable directive of maximal priority (ties: smallest id, or uniformly
  // random when seeded); directives listed in `skip` are passed over.
  std::optional<std::uint32_t> select(const PartialAssignment& a, const AtomStore& store,
                                      const std::vector<GroundDirective>& dirs,
                                      const std::unordered_set<std::uint32_t>& skip = {});

  // Must be called after the assignment was backtracked to `level`.
  void on_backtrack(std::uint32_t level);

 private:
  struct Entry {
    std::int64_t level, weight;
    std::uint32_t id;
    bool operator<(const Entry& o) const {
      if (level != o.level) return level < o.level;
      if (weight != o.weight) return weight < o.weight;
      return id > o.id;
    }
  };
  // Level of an assignment that keeps `d` inapplicable until undone, if any.
  static std::optional<std::uint32_t> blocker(const PartialAssignment& a, const AtomStore& store,
                                              const GroundDirective& d);

  std::vector<Entry> heap_;
  std::vector<Entry> deferred_;
  std::map<std::uint32_t, std::vector<Entry>> stashed_;
  std::size_t count_ = 0;
  std::optional<std::mt19937_64> rng_;
};

}  // namespace lazyheur
