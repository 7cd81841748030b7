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

#include "doctest.h"
#include "ssfkit/word.hpp"
#include "support.hpp"

using namespace ssfkit;
using namespace ssfkit::testing;

TEST_CASE("alphabet keeps construction order and rejects duplicates") {
  auto ba = Alphabet::of("ba");
  CHECK(ba->glyph(0) == "b");
  CHECK(*ba->find("a") == 1);
  CHECK_FALSE(ba->contains("c"));
  CHECK_THROWS_AS(Alphabet::of("aba"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::of(""), std::invalid_argument);
  CHECK(Alphabet::sorted_from("banana")->glyphs() == std::vector<std::string>{"a", "b", "n"});
}

TEST_CASE("alphabet symbols are UTF-8 code points") {
  auto greek = Alphabet::sorted_from("βαβ");
  REQUIRE(greek->size() == 2);
  CHECK(greek->glyph(0) == "α");
  Word w = Word::parse(greek, "αββ");
  CHECK(w.size() == 3);
  CHECK(w.str() == "αββ");
}

TEST_CASE("word parsing and rendering") {
  CHECK(W("()").empty());
  CHECK(W("").display() == "()");
  CHECK(W("abba").display() == "abba");
  CHECK_THROWS_AS(W("abc"), std::invalid_argument);
  CHECK(W("ab").pow(3) == W("ababab"));
  CHECK(W("ab").pow(0).empty());
  CHECK(W("abba").substr(1, 2) == W("bb"));
  CHECK(W("abba").prefix(3) == W("abb"));
  CHECK(W("abba").suffix(1) == W("a"));
  CHECK(W("abba").starts_with(W("ab")));
  CHECK(W("abba").ends_with(W("ba")));
  CHECK_THROWS_AS(W("ab").substr(1, 2), std::out_of_range);
}

TEST_CASE("words over different alphabets do not mix") {
  auto other = Alphabet::of("ab");
  Word u = W("ab");
  Word v = Word::parse(other, "ab");
  CHECK(u == v);  // same glyph sequence, equal alphabets
  auto ba = Alphabet::of("ba");
  CHECK_THROWS_AS(u + Word::parse(ba, "a"), AlphabetMismatch);
}

TEST_CASE("shortlex and plain lexicographic order") {
  CHECK(W("b") < W("aa"));
  CHECK(W("ab") < W("ba"));
  CHECK(W("") < W("a"));
  CHECK(lex_less(W("aa"), W("b")));
  CHECK(lex_less(W("a"), W("ab")));
  CHECK_FALSE(lex_less(W("ab"), W("ab")));
  auto ba = Alphabet::of("ba");
  CHECK(Word::parse(ba, "b") < Word::parse(ba, "a"));
}

TEST_CASE("all_words enumerates in order") {
  auto words = all_words(ab(), 2);
  REQUIRE(words.size() == 4);
  CHECK(words.front() == W("aa"));
  CHECK(words.back() == W("bb"));
  auto upto = all_words_up_to(ab(), 3);
  CHECK(upto.size() == 15);
  CHECK(upto.front().empty());
  CHECK(std::is_sorted(upto.begin(), upto.end()));
}

TEST_CASE("hash agrees with equality") {
  std::hash<Word> h;
  CHECK(h(W("abab")) == h(W("ab") + W("ab")));
  CHECK(h(W("ab")) != h(W("ba")));
}
