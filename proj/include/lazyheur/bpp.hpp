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

// Generator for perfectly packable bin-packing instances.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lazyheur {

struct BppInstance {
  std::int64_t cap = 0;
  std::size_t bins = 0;
  std::vector<std::int64_t> sizes;  // sizes[i] belongs to item i + 1
};

// Splits each of `bins` capacities into item sizes summing exactly to `cap`
// and shuffles the items. Deterministic for a given seed.
BppInstance make_bpp(std::size_t items, std::int64_t cap, std::size_t bins, std::uint64_t seed);

// Facts bcap/1, bin/1, item/1 and size/2 for an instance.
std::string bpp_facts(const BppInstance& inst);

inline std::string gen_bpp(std::size_t items, std::int64_t cap, std::size_t bins,
                           std::uint64_t seed) {
  return bpp_facts(make_bpp(items, cap, bins, seed));
}

}  // namespace lazyheur
