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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lazyheur/ast.hpp"
#include "lazyheur/normalize.hpp"
#include "lazyheur/value.hpp"

namespace lazyheur {

using AtomId = std::uint32_t;
using PredId = std::uint32_t;
inline constexpr AtomId kNoAtom = UINT32_MAX;
inline constexpr std::uint32_t kNone = UINT32_MAX;

enum class AtomKind : std::uint8_t {
  Program,    // user predicates and complement atoms
  Body,       // body-representing choice point of a ground rule
  Aggregate,  // `_ag<n>(globals..., bound)`: lower-bound aggregate instance
  Element,    // `_ae<n>(globals..., tuple...)`: aggregate element
};

/// Bijection between ground atoms and dense integer ids.
class AtomStore {
 public:
  PredId pred(std::string_view name, std::uint32_t arity);
  const std::string& pred_name(PredId p) const { return preds_[p].name; }
  std::uint32_t pred_arity(PredId p) const { return preds_[p].arity; }
  std::size_t num_preds() const { return preds_.size(); }

  AtomId intern(PredId p, std::span<const Value> args, AtomKind kind = AtomKind::Program);
  std::optional<AtomId> find(PredId p, std::span<const Value> args) const;
  AtomId new_body_atom();

  std::size_t size() const { return atoms_.size(); }
  PredId pred_of(AtomId a) const { return atoms_[a].pred; }
  std::span<const Value> args(AtomId a) const {
    return {args_.data() + atoms_[a].offset, atoms_[a].arity};
  }
  AtomKind kind(AtomId a) const { return atoms_[a].kind; }
  /// True for body atoms and every `_`-prefixed predicate.
  bool is_internal(AtomId a) const;
  const std::vector<AtomId>& atoms_of(PredId p) const { return by_pred_[p]; }

  std::string to_string(AtomId a) const;

 private:
  struct PredInfo {
    std::string name;
    std::uint32_t arity;
  };
  struct AtomInfo {
    PredId pred;
    std::uint32_t offset;
    std::uint32_t arity;
    AtomKind kind;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<Value>& k) const noexcept;
  };

  std::vector<PredInfo> preds_;
  std::unordered_map<std::string, PredId> pred_ids_;
  std::vector<AtomInfo> atoms_;
  std::vector<Value> args_;
  std::vector<std::vector<AtomId>> by_pred_;
  // key = pred id (as integer value) followed by the arguments
  std::unordered_map<std::vector<Value>, AtomId, KeyHash> ids_;
  std::uint32_t body_counter_ = 0;
  PredId body_pred_ = kNone;
};

// ---------------------------------------------------------------------------
// Compiled (non-ground) program

struct CTerm {
  enum class Kind : std::uint8_t { Const, Var, BinOp, Neg, Interval, Wild };
  Kind kind = Kind::Const;
  Value value;
  std::uint32_t var = 0;
  char op = 0;
  std::vector<CTerm> args;
};

struct CAtom {
  PredId pred = 0;
  std::vector<CTerm> args;
};

struct CLit {
  CAtom atom;
  Sign sign = Sign::Plain;  // only heuristic conditions carry signs
};

struct CCmp {
  CmpOp op;
  CTerm lhs, rhs;
};

struct CAggRef {
  std::uint32_t spec = 0;
  std::vector<CTerm> globals;
  CTerm bound;
};

struct AggSpec {
  AggFunc func;
  std::uint32_t num_globals;
  PredId atom_pred;          // `_ag<n>` with arity num_globals + 1
  std::string element_name;  // `_ae<n>`, arity varies with the tuple
};

struct SourceRule {
  enum class Kind : std::uint8_t { Normal, Constraint, Heuristic };
  Kind kind = Kind::Normal;
  std::optional<CAtom> head;  // heuristic: atm(ha0)
  Sign head_sign = Sign::Plain;
  CTerm weight, level;
  std::vector<CLit> pos;
  std::vector<CLit> neg;
  std::vector<CCmp> cmps;
  std::vector<CAggRef> aggs;
  std::uint32_t num_vars = 0;
  std::vector<std::string> var_names;
  std::string text;
  /// Every variable occurs in a plain head argument, so an atom fixes the
  /// unique instance that can derive it.
  bool closable = false;
  std::uint32_t element_of = kNone;  // aggregate spec this element rule feeds
};

// ---------------------------------------------------------------------------
// Ground output

struct GroundRule {
  std::uint32_t id = 0;
  std::uint32_t source = 0;
  bool is_heuristic = false;
  bool is_constraint = false;
  AtomId head = kNoAtom;
  std::vector<AtomId> pos;    // B+, including aggregate atoms
  std::vector<AtomId> neg;    // B-
  std::vector<AtomId> keys;   // atoms matched by the join (lazy restraint)
  std::uint32_t body = kNone; // index into Grounder::bodies(); none for constraints/heuristics
  std::uint32_t directive = kNone;
  std::uint64_t stamp = 0;    // emission time on the grounder clock
};

/// A distinct ground body shared by every rule with that body.
struct GroundBody {
  std::vector<AtomId> pos, neg;
  AtomId beta = kNoAtom;
  std::vector<std::uint32_t> rules;
};

struct GroundCond {
  Sign sign = Sign::Plain;
  AtomId atom = kNoAtom;
};

/// `not p(t, _)` style condition: any matching atom satisfying the signed
/// literal falsifies the condition.
struct GroundPattern {
  Sign sign = Sign::Plain;
  PredId pred = 0;
  std::vector<std::optional<Value>> args;  // nullopt = wildcard
};

struct GroundDirective {
  std::uint32_t id = 0;
  std::uint32_t rule = 0;
  Sign head_sign = Sign::Plain;
  AtomId head = kNoAtom;
  std::vector<GroundCond> pos;
  std::vector<GroundCond> neg;
  std::vector<GroundPattern> neg_patterns;
  std::int64_t weight = 0;
  std::int64_t level = 0;
};

struct AggGroup {
  std::uint32_t spec = 0;
  std::vector<Value> globals;
  std::vector<std::pair<AtomId, std::int64_t>> elements;  // element atom, weight
  std::vector<std::pair<std::int64_t, AtomId>> bounds;    // bound, aggregate atom
};

struct GroundingDelta {
  std::vector<std::uint32_t> rules;
  std::vector<std::uint32_t> directives;
  std::vector<std::uint32_t> new_bodies;
  AtomId first_new_atom = 0;  // atoms [first_new_atom, store.size()) are new
  std::vector<AtomId> new_aggregates;
  std::vector<std::pair<std::uint32_t, std::size_t>> new_elements;  // group, index

  bool empty() const { return rules.empty() && directives.empty(); }
};

struct GrounderOptions {
  std::size_t cap = 1000000;  // maximum number of ground rules
};

/// Semi-naive lazy instantiation of a normalized program.
///
/// Source rules are instantiated only once every atom of their positive
/// body (the grounding key of a heuristic rule) has been reported through
/// ground_new(). Emitted rules are never retracted.
class Grounder {
 public:
  explicit Grounder(const Program& normalized, GrounderOptions opts = {});

  /// Instantiates rules without positive body atoms (facts, ground rules
  /// such as compiled choices, unconditional directives).
  GroundingDelta start();

  /// `known`: atoms newly assigned T or M; `assigned`: atoms newly assigned
  /// any value (only strongly negative heuristic conditions match these).
  GroundingDelta ground_new(std::span<const AtomId> known, std::span<const AtomId> assigned);

  AtomStore& store() { return store_; }
  const AtomStore& store() const { return store_; }
  const std::vector<SourceRule>& source_rules() const { return src_; }
  const std::vector<AggSpec>& agg_specs() const { return specs_; }
  const std::vector<GroundRule>& rules() const { return rules_; }
  const std::vector<GroundBody>& bodies() const { return bodies_; }
  const std::vector<GroundDirective>& directives() const { return directives_; }
  const std::vector<AggGroup>& groups() const { return groups_; }

  /// Ground rules with the given head, in emission order.
  const std::vector<std::uint32_t>& rules_with_head(AtomId a) const;
  /// Group ids an element atom contributes to / the group of an aggregate atom.
  std::uint32_t group_of_element(AtomId a) const;
  std::uint32_t group_of_aggregate(AtomId a) const;
  std::int64_t bound_of_aggregate(AtomId a) const;

  /// All ground instances that could ever derive `a` have been emitted.
  bool is_closed(AtomId a);

  bool is_known(AtomId a) const { return a < known_stamp_.size() && known_stamp_[a] != 0; }
  bool is_assigned_ever(AtomId a) const {
    return a < assigned_stamp_.size() && assigned_stamp_[a] != 0;
  }
  std::uint64_t known_stamp(AtomId a) const { return is_known(a) ? known_stamp_[a] : 0; }
  std::uint64_t assigned_stamp(AtomId a) const {
    return is_assigned_ever(a) ? assigned_stamp_[a] : 0;
  }

  std::string rule_text(const GroundRule& r) const;
  std::string directive_text(const GroundDirective& d) const;

 private:
  struct Binding {
    std::vector<Value> vals;
    std::vector<std::uint8_t> set;
  };
  struct MatchIndex {
    std::vector<std::vector<AtomId>> by_pred;
    std::unordered_map<std::uint64_t, std::vector<AtomId>> by_first;
  };

  void compile(const Program& p);
  void compile_rule(const Rule& r, std::uint32_t element_of,
                    std::vector<std::pair<Rule, std::uint32_t>>& work);
  void compile_directive(const HeuristicDirective& d);
  CTerm compile_term(const Term& t, std::unordered_map<std::string, std::uint32_t>& vars,
                     std::vector<std::string>& names, bool anon_is_wild);
  CAtom compile_atom(const Atom& a, std::unordered_map<std::string, std::uint32_t>& vars,
                     std::vector<std::string>& names, bool anon_is_wild);
  void index_rule(std::uint32_t id);

  void add_to_index(MatchIndex& idx, AtomId a);
  static std::uint64_t first_key(PredId p, const Value& v);

  bool unify(const CAtom& pat, AtomId a, Binding& b, std::vector<std::uint32_t>& trail) const;
  void match(std::uint32_t rule, std::uint32_t seed_pos, AtomId seed, GroundingDelta& out);
  void join(const SourceRule& r, std::uint32_t rule, std::uint32_t seed_pos, std::uint32_t next,
            Binding& b, std::vector<AtomId>& keys, GroundingDelta& out);
  void instantiate(std::uint32_t rule, const Binding& b, const std::vector<AtomId>& keys,
                   GroundingDelta& out);
  Value eval(const CTerm& t, const Binding& b) const;
  void eval_expand(const CTerm& t, const Binding& b, std::vector<Value>& out) const;
  AtomId ground_atom(const CAtom& a, const Binding& b);
  AtomId intern_head(PredId p, std::span<const Value> args);
  void emit_rule(GroundRule r, const std::string& fingerprint, GroundingDelta& out);
  void register_element(AtomId head, std::uint32_t spec, GroundingDelta& out);
  std::uint32_t group_for(std::uint32_t spec, std::vector<Value> globals);

  GrounderOptions opts_;
  AtomStore store_;
  std::vector<SourceRule> src_;
  std::vector<AggSpec> specs_;
  std::unordered_map<PredId, std::uint32_t> element_pred_spec_;

  // predicate -> (rule, position) pairs seeded by known / assigned atoms
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seed_known_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seed_assigned_;
  std::vector<std::vector<std::uint32_t>> head_sources_;  // pred -> source rules
  std::vector<std::uint32_t> seedless_;

  MatchIndex known_idx_, assigned_idx_;
  std::vector<std::uint64_t> known_stamp_, assigned_stamp_;
  std::uint64_t clock_ = 0;

  std::vector<GroundRule> rules_;
  std::vector<GroundBody> bodies_;
  std::vector<GroundDirective> directives_;
  std::unordered_set<std::string> fingerprints_;
  std::unordered_map<std::string, std::uint32_t> body_ids_;
  std::unordered_set<std::uint64_t> emitted_heads_;  // (source << 32) | head
  std::vector<std::vector<std::uint32_t>> head_rules_;
  std::vector<std::uint8_t> closed_;

  std::vector<AggGroup> groups_;
  std::unordered_map<std::string, std::uint32_t> group_ids_;
  std::unordered_map<AtomId, std::uint32_t> element_group_;
  std::unordered_map<AtomId, std::uint32_t> aggregate_group_;
  std::unordered_map<AtomId, std::int64_t> aggregate_bound_;
};

/// Eager instantiation over every atom that is derivable when negation is
/// ignored; used by the oracle and the `ground` command. Throws E_TOO_LARGE
/// above `opts.cap` rules.
class FullGrounding {
 public:
  FullGrounding(const Program& normalized, GrounderOptions opts = {});
  const Grounder& grounder() const { return g_; }

 private:
  Grounder g_;
};

}  // namespace lazyheur
