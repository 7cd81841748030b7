// Copyright 2026 The ssfkit Authors.
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

#include <algorithm>

#include "doctest.h"
#include "ssfkit/hitting_set.hpp"
#include "support.hpp"

using namespace ssfkit;
using namespace ssfkit::testing;

namespace {

HittingSetInstance random_instance(std::mt19937_64& gen, std::size_t elements, std::size_t candidates, double density) {
  HittingSetInstance inst{elements, {}};
  std::bernoulli_distribution hit(density);
  for (std::size_t c = 0; c < candidates; ++c) {
    Bitset b(elements);
    for (std::size_t e = 0; e < elements; ++e) {
      if (hit(gen)) b.set(e);
    }
    inst.candidates.push_back(b);
  }
  return inst;
}

std::vector<std::size_t> members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (mask >> i & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("bitset basics") {
  Bitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.first() == std::optional<std::size_t>(0));
  CHECK(b.next(1) == std::optional<std::size_t>(64));
  CHECK(b.next(130) == std::nullopt);
  Bitset c(130);
  c.set_all();
  CHECK(c.count() == 130);
  CHECK(b.is_subset_of(c));
  CHECK(b.count_and(c) == 3);
  c.subtract(b);
  CHECK_FALSE(c.intersects(b));
  CHECK(c.count() == 127);
}

TEST_CASE("hitting set edge cases") {
  HittingSetInstance none{0, {Bitset(0)}};
  CHECK(minimum_hitting_set(none) == std::optional<std::vector<std::size_t>>(std::vector<std::size_t>{}));
  CHECK(minimal_hitting_sets(none) == std::vector<std::vector<std::size_t>>{{}});

  HittingSetInstance stuck{2, {Bitset(2)}};
  stuck.candidates[0].set(0);
  CHECK_FALSE(minimum_hitting_set(stuck).has_value());
  CHECK(minimal_hitting_sets(stuck).empty());
}

TEST_CASE("minimum hitting set matches exhaustive search, lex-least on ties") {
  auto gen = rng(20);
  for (int t = 0; t < 300; ++t) {
    const std::size_t cands = 1 + t % 12;
    auto inst = random_instance(gen, 1 + t % 9, cands, 0.3);
    std::optional<std::vector<std::size_t>> best;
    for (std::uint32_t mask = 0; mask < (1U << cands); ++mask) {
      auto sel = members(mask);
      if (!inst.is_hitting_set(sel)) continue;
      if (!best || sel.size() < best->size() || (sel.size() == best->size() && sel < *best)) best = sel;
    }
    REQUIRE(minimum_hitting_set(inst) == best);
  }
}

TEST_CASE("minimal hitting sets match exhaustive enumeration") {
  auto gen = rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t cands = 1 + t % 10;
    auto inst = random_instance(gen, 1 + t % 7, cands, 0.35);
    std::vector<std::vector<std::size_t>> expected;
    for (std::uint32_t mask = 0; mask < (1U << cands); ++mask) {
      auto sel = members(mask);
      if (!inst.is_hitting_set(sel)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < sel.size() && minimal; ++drop) {
        auto smaller = sel;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        minimal = !inst.is_hitting_set(smaller);
      }
      if (minimal) expected.push_back(sel);
    }
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    REQUIRE(minimal_hitting_sets(inst) == expected);
  }
}
