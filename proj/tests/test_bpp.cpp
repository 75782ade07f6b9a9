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

#include <doctest.h>

#include <numeric>

#include "lazyheur/bpp.hpp"
#include "lazyheur/error.hpp"
#include "support.hpp"

using namespace lazyheur;
using namespace testsupport;

TEST_CASE("instances are perfectly packable") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BppInstance inst = make_bpp(30, 10, 6, seed);
    CHECK(inst.sizes.size() == 30);
    CHECK(std::accumulate(inst.sizes.begin(), inst.sizes.end(), std::int64_t{0}) == 60);
    for (auto s : inst.sizes) CHECK((s >= 1 && s <= 10));
  }
}

TEST_CASE("generation is deterministic") {
  CHECK(gen_bpp(20, 8, 5, 4) == gen_bpp(20, 8, 5, 4));
  CHECK(gen_bpp(20, 8, 5, 4) != gen_bpp(20, 8, 5, 5));
}

TEST_CASE("fact format") {
  CHECK(gen_bpp(1, 1, 1, 0) == "bcap(1).\nbin(1..1).\nitem(1..1).\nsize(1,1).\n");
}

TEST_CASE("invalid arguments") {
  auto code = [](std::size_t n, std::int64_t c, std::size_t b) {
    try {
      make_bpp(n, c, b, 0);
    } catch (const Error& e) {
      return static_cast<int>(e.code());
    }
    return -1;
  };
  CHECK(code(2, 5, 3) == static_cast<int>(ErrorCode::Args));
  CHECK(code(10, 2, 3) == static_cast<int>(ErrorCode::Args));
  CHECK(code(0, 5, 1) == static_cast<int>(ErrorCode::Args));
  CHECK(code(1, 0, 1) == static_cast<int>(ErrorCode::Args));
  CHECK(code(3, 5, 3) == -1);
}

TEST_CASE("generated instances are solved with the encoding") {
  std::string encoding = corpus("bpp_encoding.lp");
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    SolveOptions o;
    auto r = solve(load(gen_bpp(8, 5, 3, seed) + encoding), o, {});
    CHECK(r.models == 1);
  }
}
