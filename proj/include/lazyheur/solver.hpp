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

// Search over body choice points, interleaved with lazy grounding and guided
// by heuristic directives.
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lazyheur/assignment.hpp"
#include "lazyheur/ast.hpp"
#include "lazyheur/grounder.hpp"
#include "lazyheur/heuristics.hpp"

namespace lazyheur {

struct SolveOptions {
  std::size_t models = 1;  // 0 = enumerate all
  bool heuristics = true;
  std::optional<std::uint64_t> seed;  // random tie-breaking among equal priorities
  std::size_t cap = 1000000;          // ground rule cap
  double time_limit = 0;              // seconds, 0 = unlimited
};

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t heuristic_decisions = 0;
  std::uint64_t backtracks = 0;
  std::uint64_t ground_rules = 0;
  std::uint64_t ground_directives = 0;
  double wall_time = 0;  // seconds
};

struct SolveResult {
  std::size_t models = 0;
  bool exhausted = false;  // the search space was fully explored
  bool timed_out = false;
  SolveStats stats;
  std::vector<std::string> warnings;
};

// Receives a sorted answer set; return false to stop the search.
using ModelCallback = std::function<bool(const std::vector<std::string>&)>;
using TraceCallback = std::function<void(std::string_view)>;

class Solver {
 public:
  Solver(const Program& normalized, SolveOptions opts);

  SolveResult run(const ModelCallback& on_model, const TraceCallback& trace = {});

  const Grounder& grounder() const { return g_; }
  const PartialAssignment& assignment() const { return a_; }

 private:
  struct Decision {
    AtomId beta;
    bool value;
    bool flipped;
  };
  // A check that integrating new ground rules ran at some decision level.
  // Its consequences are undone by backtracking while the rules stay, so it
  // is repeated after every backtrack below that level.
  struct Recheck {
    enum class Kind : std::uint8_t { Body, Constraint, Group, Support };
    std::uint32_t level;
    Kind kind;
    std::uint32_t id;
  };

  bool set(AtomId atom, Truth v, Reason why);
  bool integrate(const GroundingDelta& d);
  bool propagate();
  bool process(AtomId x);
  bool check_body(std::uint32_t b);
  bool check_constraint(std::uint32_t r);
  bool check_group(std::uint32_t g);
  bool check_support(AtomId h);
  bool run_check(const Recheck& c);
  bool decide();
  // 0 = decided, otherwise the reason the directive could not be used
  int decide_from_directive(std::uint32_t id);
  bool resolve();
  bool complete() const;
  std::vector<std::string> answer_set() const;
  void warn(const std::string& w);
  void emit(const std::string& line) const {
    if (trace_) trace_(line);
  }

  SolveOptions opts_;
  Grounder g_;
  PartialAssignment a_;
  HeuristicPool pool_;
  std::vector<Decision> stack_;
  std::vector<AtomId> queue_;
  std::size_t queue_head_ = 0;
  std::vector<AtomId> feed_;
  std::vector<std::vector<std::uint32_t>> body_watch_, cons_watch_;
  std::vector<std::uint32_t> beta_body_;
  std::vector<std::uint32_t> constraints_;
  std::vector<Recheck> rechecks_, pending_;
  SolveStats stats_;
  std::vector<std::string> warnings_;
  std::unordered_set<std::string> warned_;
  TraceCallback trace_;
};

// Convenience wrapper around Solver.
SolveResult solve(const Program& normalized, const SolveOptions& opts,
                  const ModelCallback& on_model, const TraceCallback& trace = {});

std::string format_answer_set(const std::vector<std::string>& atoms);

}  // namespace lazyheur
