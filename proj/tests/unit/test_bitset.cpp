// Copyright 2026 The qmentropy Authors
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

#include <random>

#include "qme/bitset.hpp"

using qme::Bitset;

TEST_CASE("bitset basics") {
  Bitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.find_first() == 0);
  CHECK(b.find_next(0) == 64);
  CHECK(b.find_next(64) == 129);
  CHECK(b.find_next(129) == Bitset::npos);
  CHECK(b.to_indices() == std::vector<std::size_t>{0, 64, 129});
  b.flip();
  CHECK(b.count() == 127);
  CHECK_FALSE(b.test(64));
  Bitset full(130, true);
  CHECK(full.count() == 130);
  full.subtract(b);
  CHECK(full.to_indices() == std::vector<std::size_t>{0, 64, 129});
  CHECK(Bitset(0).find_first() == Bitset::npos);
}

TEST_CASE("property: bitset operations agree with std::vector<bool>") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    Bitset a(n), b(n);
    std::vector<bool> va(n), vb(n);
    for (std::size_t i = 0; i < n; ++i) {
      va[i] = rng() & 1;
      vb[i] = rng() & 1;
      a.assign(i, va[i]);
      b.assign(i, vb[i]);
    }
    std::size_t both = 0;
    for (std::size_t i = 0; i < n; ++i) both += va[i] && vb[i];
    CHECK(a.and_count(b) == both);
    CHECK(a.intersects(b) == (both > 0));
    const Bitset u = a | b;
    const Bitset x = a & b;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(u.test(i) == (va[i] || vb[i]));
      CHECK(x.test(i) == (va[i] && vb[i]));
    }
  }
}
