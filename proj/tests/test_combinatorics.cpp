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
#include <numeric>

#include "doctest.h"
#include "ssfkit/combinatorics.hpp"
#include "support.hpp"

using namespace ssfkit;
using namespace ssfkit::testing;

namespace {

// Divisor-length oracle: the shortest prefix whose repetition rebuilds w.
Word divisor_root(const Word& w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d == 0 && w.prefix(d).pow(w.size() / d) == w) return w.prefix(d);
  }
  return w;
}

// Minimum over all rotations of the divisor root.
Word rotation_min(const Word& w) {
  Word root = divisor_root(w);
  Word best = root;
  for (std::size_t i = 1; i < root.size(); ++i) {
    Word rot = root.suffix(root.size() - i) + root.prefix(i);
    if (lex_less(rot, best)) best = rot;
  }
  return best;
}

// Every (start, exponent) with p^e at start, e >= 1.
std::vector<std::pair<std::size_t, std::size_t>> power_occurrences(const Word& w, const Word& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < w.size(); ++s) {
    for (std::size_t e = 1; s + e * p.size() <= w.size(); ++e) {
      if (w.substr(s, e * p.size()) == p.pow(e)) out.emplace_back(s, e);
    }
  }
  return out;
}

bool shares_factor(const Word& a, const Word& b, std::size_t len) {
  auto fa = factors_of_length(a, len);
  return std::any_of(fa.begin(), fa.end(), [&](const Word& f) { return naive_count(b, f) > 0; });
}

}  // namespace

TEST_CASE("count_occurrences examples") {
  CHECK(count_occurrences(W("aabab"), W("ab")) == 2);
  CHECK(count_occurrences(W("ab"), W("")) == 3);
  CHECK(count_occurrences(W("aaaa"), W("aa")) == naive_count(W("aaaa"), W("aa")));
  CHECK(count_occurrences(W("aaaa"), W("aa")) == 3);
  CHECK(count_occurrences(W("a"), W("ab")) == 0);
  CHECK_THROWS_AS(count_occurrences(W("ab"), Word::parse(Alphabet::of("ba"), "a")), AlphabetMismatch);
}

TEST_CASE("count_occurrences matches the sliding-window oracle") {
  auto gen = rng(1);
  auto abc = Alphabet::of("abc");
  for (int t = 0; t < 1000; ++t) {
    const auto& alpha = t % 2 ? ab() : abc;
    Word w = random_word(gen, alpha, 0, 30);
    Word x = random_word(gen, alpha, 1, 4);
    REQUIRE(count_occurrences(w, x) == naive_count(w, x));
    REQUIRE(occurrence_positions(w, x).size() == naive_count(w, x));
  }
}

TEST_CASE("counts of all length-k factors sum to the window count") {
  auto gen = rng(2);
  for (int t = 0; t < 200; ++t) {
    Word w = random_word(gen, ab(), 0, 20);
    CHECK(count_occurrences(w, W("")) == w.size() + 1);
    for (std::size_t k = 1; k <= 4; ++k) {
      std::size_t total = 0;
      for (const Word& x : all_words(ab(), k)) total += count_occurrences(w, x);
      CHECK(total == (w.size() >= k ? w.size() - k + 1 : 0));
    }
  }
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(W("abab")) == W("ab"));
  CHECK(primitive_root(W("a")) == W("a"));
  CHECK(primitive_root(W("aabaab")) == divisor_root(W("aabaab")));
  CHECK(primitive_root(W("aabaab")) == W("aab"));
  CHECK(is_primitive(W("ab")));
  CHECK_FALSE(is_primitive(W("abab")));
  CHECK(is_primitive(W("aabaa")) == (divisor_root(W("aabaa")) == W("aabaa")));
  CHECK(is_primitive(W("aabaa")));
  CHECK_THROWS_AS(primitive_root(W("")), std::invalid_argument);
  CHECK_THROWS_AS(is_primitive(W("")), std::invalid_argument);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Word& w : all_words(ab(), n)) REQUIRE(primitive_root(w) == divisor_root(w));
  }
}

TEST_CASE("commutation") {
  CHECK(commute(W("ab"), W("abab")));
  CHECK_FALSE(commute(W("ab"), W("ba")));
  CHECK(commute(W(""), W("aba")));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Word& u : all_words(ab(), n)) {
      for (const Word& v : all_words_up_to(ab(), 4)) {
        if (v.empty()) continue;
        REQUIRE(commute(u, v) == (primitive_root(u) == primitive_root(v)));
      }
    }
  }
}

TEST_CASE("Lyndon roots") {
  CHECK(lyndon_root(W("ba")) == W("ab"));
  CHECK(lyndon_root(W("bab")) == rotation_min(W("bab")));
  CHECK(lyndon_root(W("bab")) == W("abb"));
  CHECK(lyndon_root(W("aabaab")) == W("aab"));
  CHECK(is_lyndon(W("aab")));
  CHECK_FALSE(is_lyndon(W("aba")));
  CHECK_FALSE(is_lyndon(W("abab")));
  CHECK_THROWS_AS(lyndon_root(W("")), std::invalid_argument);
  auto abc = Alphabet::of("abc");
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Word& w : all_words(abc, n)) REQUIRE(lyndon_root(w) == rotation_min(w));
  }
}

TEST_CASE("Lyndon root respects the alphabet order") {
  auto ba = Alphabet::of("ba");
  CHECK(lyndon_root(Word::parse(ba, "ab")) == Word::parse(ba, "ba"));
}

TEST_CASE("Fine-Wilf threshold") {
  CHECK(fine_wilf_threshold(W("a"), W("aa")) == 2);
  CHECK(fine_wilf_threshold(W("ab"), W("ab")) == 2);
  CHECK(fine_wilf_threshold(W("ab"), W("aba")) == 4);
  CHECK_THROWS_AS(fine_wilf_threshold(W(""), W("a")), std::invalid_argument);
}

TEST_CASE("periodic prefixes agreeing up to the Fine-Wilf threshold share a root") {
  for (const Word& u : all_words_up_to(ab(), 5)) {
    if (u.empty()) continue;
    for (const Word& v : all_words_up_to(ab(), 5)) {
      if (v.empty()) continue;
      const std::size_t t = fine_wilf_threshold(u, v);
      Word pu = u.pow(t / u.size() + 1).prefix(t);
      Word pv = v.pow(t / v.size() + 1).prefix(t);
      if (pu == pv) REQUIRE(primitive_root(u) == primitive_root(v));
    }
  }
}

TEST_CASE("powers sharing a factor of length |uv| have the same Lyndon root") {
  for (const Word& u : all_words_up_to(ab(), 4)) {
    if (u.empty()) continue;
    for (const Word& v : all_words_up_to(ab(), 4)) {
      if (v.empty()) continue;
      for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 4; ++n) {
          if (shares_factor(u.pow(m), v.pow(n), u.size() + v.size())) REQUIRE(lyndon_root(u) == lyndon_root(v));
        }
      }
    }
  }
}

TEST_CASE("occurrence overlap and containment") {
  auto host = std::make_shared<const Word>(W("abab"));
  Occurrence aba(host, 0, 3);
  Occurrence ab_late(host, 2, 2);
  CHECK(occurrence_overlap(aba, ab_late) == std::optional<std::size_t>(1));
  CHECK_FALSE(occurrence_overlap(Occurrence(host, 0, 1), Occurrence(host, 2, 1)).has_value());
  CHECK(occurrence_overlap(aba, aba) == std::optional<std::size_t>(3));

  auto host2 = std::make_shared<const Word>(W("ababa"));
  Occurrence inner(host2, 2, 2);
  Occurrence outer(host2, 0, 4);
  CHECK(occurrence_contains(inner, outer));
  CHECK(occurrence_contains(inner, inner));
  CHECK_FALSE(occurrence_contains(outer, inner));

  auto other = std::make_shared<const Word>(W("abba"));
  CHECK_THROWS_AS(occurrence_overlap(aba, Occurrence(other, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(occurrence_contains(aba, Occurrence(other, 0, 1)), std::invalid_argument);
}

TEST_CASE("occurrence triples round-trip") {
  auto o = Occurrence::from_triple(W("ab"), W("ab"), W("a"));
  CHECK(o.host() == W("ababa"));
  CHECK(o.pre() == W("ab"));
  CHECK(o.factor() == W("ab"));
  CHECK(o.post() == W("a"));
  CHECK(o.pre() + o.factor() + o.post() == o.host());
}

TEST_CASE("maximal power occurrences examples") {
  auto runs = maximal_power_occurrences(W("aaabaa"), W("a"), 1);
  REQUIRE(runs.size() == 2);
  CHECK(runs[0].pre() == W(""));
  CHECK(runs[0].factor() == W("aaa"));
  CHECK(runs[0].post() == W("baa"));
  CHECK(runs[1].pre() == W("aaab"));
  CHECK(runs[1].factor() == W("aa"));
  CHECK(runs[1].post() == W(""));

  auto ab_runs = maximal_power_occurrences(W("ababa"), W("ab"), 1);
  REQUIRE(ab_runs.size() == 1);
  CHECK(ab_runs[0].factor() == W("abab"));
  CHECK(ab_runs[0].post() == W("a"));

  CHECK(maximal_power_occurrences(W("b"), W("a"), 1).empty());
  CHECK(maximal_power_occurrences(W("aaabaa"), W("a"), 3).size() == 1);
  CHECK_THROWS_AS(maximal_power_occurrences(W("abab"), W("abab"), 1), std::invalid_argument);
  CHECK_THROWS_AS(maximal_power_occurrences(W("abab"), W("ab"), 0), std::invalid_argument);
}

TEST_CASE("maximal power occurrences: overlapping runs merge and results are maximal") {
  auto gen = rng(3);
  for (int t = 0; t < 300; ++t) {
    Word w = random_word(gen, ab(), 0, 30);
    Word p = random_word(gen, ab(), 1, 4);
    if (!is_primitive(p)) continue;
    auto runs = maximal_power_occurrences(w, p, 1);
    auto all = power_occurrences(w, p);
    auto host = std::make_shared<const Word>(w);
    auto containing = [&](std::size_t s, std::size_t e) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].start() <= s && s + e * p.size() <= runs[i].end()) idx.push_back(i);
      }
      return idx;
    };
    // Every p+-occurrence sits in exactly one returned run.
    for (auto [s, e] : all) REQUIRE(containing(s, e).size() == 1);
    // Occurrences overlapping by >= |p| share the run.
    for (auto [s1, e1] : all) {
      for (auto [s2, e2] : all) {
        auto ov = occurrence_overlap(Occurrence(host, s1, e1 * p.size()), Occurrence(host, s2, e2 * p.size()));
        if (ov && *ov >= p.size()) REQUIRE(containing(s1, e1) == containing(s2, e2));
      }
    }
    // No run is contained in a different p+-occurrence.
    for (const auto& run : runs) {
      REQUIRE(run.length() % p.size() == 0);
      REQUIRE(run.factor() == p.pow(run.length() / p.size()));
      for (auto [s, e] : all) {
        if (s == run.start() && e * p.size() == run.length()) continue;
        REQUIRE_FALSE((s <= run.start() && run.end() <= s + e * p.size()));
      }
    }
    for (std::size_t i = 1; i < runs.size(); ++i) {
      auto ov = occurrence_overlap(runs[i - 1], runs[i]);
      REQUIRE((!ov || *ov < p.size()));
    }
  }
}

TEST_CASE("factor sets") {
  CHECK(factors_up_to(W("ab"), 2) == Ws({"", "a", "b", "ab"}));
  CHECK(factors_up_to(W("aaa"), 1) == Ws({"", "a"}));
  CHECK(factors_up_to(W("abab"), 3) == Ws({"", "a", "b", "ab", "ba", "aba", "bab"}));
  CHECK(factors_of_length(W("abab"), 2) == Ws({"ab", "ba"}));
  CHECK(factors_of_length(W("ab"), 0) == Ws({""}));
  CHECK(factors_of_length(W("ab"), 3).empty());
}
