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

#include "lazyheur/value.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace lazyheur {
namespace {

class SymbolTable {
 public:
  std::int64_t intern(std::string_view name) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    names_.emplace_back(name);
    auto id = static_cast<std::int64_t>(names_.size() - 1);
    ids_.emplace(names_.back(), id);
    return id;
  }

  std::string_view name(std::int64_t id) {
    std::lock_guard<std::mutex> lock(mutex_);
    // deque never relocates existing elements
    return names_[static_cast<std::size_t>(id)];
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::int64_t> ids_;
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

}  // namespace

Value Value::symbol(std::string_view name) {
  return Value(Kind::Sym, symbols().intern(name));
}

std::string_view Value::name() const { return symbols().name(raw_); }

std::string Value::to_string() const {
  if (is_int()) return std::to_string(raw_);
  return std::string(name());
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.is_int() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_int()) return a.raw_ <=> b.raw_;
  if (a.raw_ == b.raw_) return std::strong_ordering::equal;
  int c = a.name().compare(b.name());
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::int64_t euclid_mod(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

}  // namespace lazyheur
