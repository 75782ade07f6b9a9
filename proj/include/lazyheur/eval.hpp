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

#include <map>
#include <string>

#include "lazyheur/ast.hpp"
#include "lazyheur/value.hpp"

namespace lazyheur {

using Substitution = std::map<std::string, Value>;

/// Integer arithmetic over values; `\` is Euclidean modulo. Non-integer
/// operands and division by zero raise E_EVAL.
Value arith(char op, const Value& a, const Value& b);
Value negate(const Value& v);

bool compare(CmpOp op, const Value& a, const Value& b);

/// Evaluates a term under a substitution. Unbound variables, `_` and
/// intervals raise E_EVAL.
Value eval(const Term& t, const Substitution& sigma = {});

/// Evaluates a built-in comparison under a substitution.
bool eval_builtin(const Comparison& c, const Substitution& sigma);

}  // namespace lazyheur
