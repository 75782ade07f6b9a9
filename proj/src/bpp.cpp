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

#include "lazyheur/bpp.hpp"

#include <algorithm>
#include <random>

#include "lazyheur/error.hpp"

namespace lazyheur {

namespace {

// Uniform draw in [0, n) by rejection, independent of the standard library's
// distribution implementations so output is identical across platforms.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

}  // namespace

BppInstance make_bpp(std::size_t items, std::int64_t cap, std::size_t bins, std::uint64_t seed) {
  if (items < 1 || cap < 1 || bins < 1)
    throw Error(ErrorCode::Args, "items, capacity and bins must all be at least 1");
  if (items < bins)
    throw Error(ErrorCode::Args, "every bin needs at least one item (items < bins)");
  if (items > bins * static_cast<std::uint64_t>(cap))
    throw Error(ErrorCode::Args, "items of size >= 1 cannot fill the bins exactly (items > bins * cap)");

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> count(bins, 1);
  std::vector<std::size_t> open;  // bins that can take another item
  for (std::size_t b = 0; b < bins; ++b)
    if (static_cast<std::int64_t>(count[b]) < cap) open.push_back(b);
  for (std::size_t left = items - bins; left > 0; --left) {
    std::size_t k = draw(rng, open.size());
    std::size_t b = open[k];
    if (static_cast<std::int64_t>(++count[b]) == cap) {
      open[k] = open.back();
      open.pop_back();
    }
  }

  BppInstance inst;
  inst.cap = cap;
  inst.bins = bins;
  for (std::size_t b = 0; b < bins; ++b) {
    // random composition of cap into count[b] positive parts
    std::vector<std::int64_t> cuts;
    for (std::int64_t c = 1; c < cap; ++c) cuts.push_back(c);
    shuffle(cuts, rng);
    cuts.resize(count[b] - 1);
    std::sort(cuts.begin(), cuts.end());
    std::int64_t prev = 0;
    for (auto c : cuts) {
      inst.sizes.push_back(c - prev);
      prev = c;
    }
    inst.sizes.push_back(cap - prev);
  }
  shuffle(inst.sizes, rng);
  return inst;
}

std::string bpp_facts(const BppInstance& inst) {
  std::string s = "bcap(" + std::to_string(inst.cap) + ").\n";
  s += "bin(1.." + std::to_string(inst.bins) + ").\n";
  s += "item(1.." + std::to_string(inst.sizes.size()) + ").\n";
  for (std::size_t i = 0; i < inst.sizes.size(); ++i)
    s += "size(" + std::to_string(i + 1) + "," + std::to_string(inst.sizes[i]) + ").\n";
  return s;
}

}  // namespace lazyheur
