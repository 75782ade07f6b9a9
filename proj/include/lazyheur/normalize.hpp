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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lazyheur/ast.hpp"

namespace lazyheur {

/// Prefix of the complement predicates introduced by choice compilation.
/// User programs cannot spell it: the lexer rejects `_`-prefixed identifiers.
inline constexpr std::string_view kComplementPrefix = "_co_";

std::string complement_pred(std::string_view pred);
bool is_internal_pred(std::string_view pred);

/// Expands interval facts, compiles choice heads into complement-atom rule
/// pairs and checks safety of every rule and directive (E_UNSAFE).
/// Idempotent. Empty intervals produce a warning in `Program::warnings`.
Program normalize(const Program& p);

/// A `#heuristic` directive rewritten as a rule with head
/// `_h(atm(ha0), w, l, sign)`. The condition keeps its sign symbols so it
/// can later be evaluated against a partial assignment.
struct HeuristicRule {
  Atom head_atom;  // atm(ha0)
  Term weight;
  Term level;
  bool sign = true;  // `+` and no sign map to true, `-` to false
  std::vector<HeuristicAtom> pos;
  std::vector<HeuristicAtom> neg;
  std::vector<Comparison> builtins;

  /// {atm(ha) | ha in c+}: the atoms whose derivation triggers grounding.
  std::vector<Atom> grounding_key() const;

  friend bool operator==(const HeuristicRule&, const HeuristicRule&) = default;
};

HeuristicRule directive_to_heuristic_rule(const HeuristicDirective& d);

std::string to_string(const HeuristicRule& r);

}  // namespace lazyheur
