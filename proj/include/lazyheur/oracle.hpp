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

// Brute-force reference semantics for small ground programs.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lazyheur/ast.hpp"
#include "lazyheur/grounder.hpp"

namespace lazyheur {

struct OracleOptions {
  std::size_t max_atoms = 24;  // cap on non-fact atoms that may be true
  std::size_t cap = 1000000;   // ground rule cap of the full grounding
};

// Ground program over user-visible atoms (plus choice complements); aggregate
// literals keep their element conditions instead of auxiliary atoms.
class OracleProgram {
 public:
  struct Body {
    std::vector<std::uint32_t> pos, neg, aggs;
  };
  struct Rule {
    std::int64_t head = -1;  // -1 for constraints
    Body body;
  };
  struct Element {
    std::int64_t weight = 1;
    std::vector<Body> conditions;  // element holds if any condition holds
  };
  struct Aggregate {
    std::int64_t bound = 0;  // satisfied iff the weight sum reaches the bound
    std::vector<Element> elements;
  };
  using Model = std::vector<bool>;

  static OracleProgram from_grounding(const Grounder& g);
  static OracleProgram from_program(const Program& normalized, std::size_t cap = 1000000);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool has_aggregates() const { return !aggs_.empty(); }
  std::int64_t atom(const std::string& text) const;  // -1 if unknown

  bool satisfies(const Model& m, const Body& b) const;
  bool is_model(const Model& m) const;
  // Model that no proper subset satisfies the FLP reduct of.
  bool is_answer_set(const Model& m) const;
  // Gelfond-Lifschitz check via the least model of the reduct (no aggregates).
  bool is_answer_set_gl(const Model& m) const;
  bool is_answer_set(const std::set<std::string>& visible_atoms) const;

  // Every answer set, as sorted lists of visible atoms.
  std::vector<std::vector<std::string>> enumerate(std::size_t max_atoms = 24) const;
  std::vector<std::string> visible(const Model& m) const;

 private:
  bool holds(const Model& m, const Aggregate& a) const;
  std::vector<std::string> atoms_;
  std::vector<bool> internal_;
  std::vector<Rule> rules_;
  std::vector<Aggregate> aggs_;
};

std::vector<std::vector<std::string>> enumerate_answer_sets(const Program& normalized,
                                                            const OracleOptions& opts = {});

}  // namespace lazyheur
