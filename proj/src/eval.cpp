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

#include "lazyheur/eval.hpp"

#include "lazyheur/error.hpp"

namespace lazyheur {

Value arith(char op, const Value& a, const Value& b) {
  if (!a.is_int() || !b.is_int())
    throw Error(ErrorCode::Eval, "arithmetic on non-integer operand: " + a.to_string() + " " +
                                     op + " " + b.to_string());
  std::int64_t x = a.as_int(), y = b.as_int();
  switch (op) {
    case '+': return Value::integer(x + y);
    case '-': return Value::integer(x - y);
    case '*': return Value::integer(x * y);
    case '/':
      if (y == 0) throw Error(ErrorCode::Eval, "division by zero");
      return Value::integer(x / y);
    case '\\':
      if (y == 0) throw Error(ErrorCode::Eval, "modulo by zero");
      return Value::integer(euclid_mod(x, y));
  }
  throw Error(ErrorCode::Eval, std::string("unknown operator ") + op);
}

Value negate(const Value& v) {
  if (!v.is_int()) throw Error(ErrorCode::Eval, "negation of non-integer " + v.to_string());
  return Value::integer(-v.as_int());
}

bool compare(CmpOp op, const Value& a, const Value& b) {
  switch (op) {
    case CmpOp::Eq: return a == b;
    case CmpOp::Ne: return a != b;
    case CmpOp::Lt: return a < b;
    case CmpOp::Le: return a <= b;
    case CmpOp::Gt: return a > b;
    case CmpOp::Ge: return a >= b;
  }
  return false;
}

Value eval(const Term& t, const Substitution& sigma) {
  switch (t.kind) {
    case Term::Kind::Int: return Value::integer(t.num);
    case Term::Kind::Sym: return Value::symbol(t.name);
    case Term::Kind::Var: {
      auto it = sigma.find(t.name);
      if (it == sigma.end()) throw Error(ErrorCode::Eval, "unbound variable " + t.name);
      return it->second;
    }
    case Term::Kind::Anon: throw Error(ErrorCode::Eval, "anonymous variable has no value");
    case Term::Kind::Neg: return negate(eval(t.args[0], sigma));
    case Term::Kind::BinOp: return arith(t.op, eval(t.args[0], sigma), eval(t.args[1], sigma));
    case Term::Kind::Interval: throw Error(ErrorCode::Eval, "interval in value position");
  }
  throw Error(ErrorCode::Eval, "bad term");
}

bool eval_builtin(const Comparison& c, const Substitution& sigma) {
  return compare(c.op, eval(c.lhs, sigma), eval(c.rhs, sigma));
}

}  // namespace lazyheur
