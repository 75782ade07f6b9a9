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

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace lazyheur {

/// A ground term: an integer or an interned symbolic constant.
///
/// Symbols are interned in a process-wide, append-only table so that values
/// are trivially copyable and compare in O(1) for equality. Ordering follows
/// the usual ASP convention: all integers precede all symbols, symbols are
/// ordered lexicographically.
class Value {
 public:
  Value() = default;

  static Value integer(std::int64_t v) { return Value(Kind::Int, v); }
  static Value symbol(std::string_view name);

  bool is_int() const { return kind_ == Kind::Int; }
  bool is_symbol() const { return kind_ == Kind::Sym; }
  std::int64_t as_int() const { return raw_; }
  std::string_view name() const;

  std::string to_string() const;
  std::size_t hash() const {
    return std::hash<std::int64_t>()(raw_) * 31 + static_cast<std::size_t>(kind_);
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.kind_ == b.kind_ && a.raw_ == b.raw_;
  }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  enum class Kind : std::uint8_t { Int, Sym };
  Value(Kind k, std::int64_t raw) : kind_(k), raw_(raw) {}

  Kind kind_ = Kind::Int;
  std::int64_t raw_ = 0;  // integer value or symbol id
};

/// Euclidean modulo; the divisor must be non-zero.
std::int64_t euclid_mod(std::int64_t a, std::int64_t b);

}  // namespace lazyheur

template <>
struct std::hash<lazyheur::Value> {
  std::size_t operator()(const lazyheur::Value& v) const noexcept { return v.hash(); }
};
