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

// Shared helpers for the unit and acceptance tests: word literals, seeded
// generators and brute-force oracles that avoid the library's algorithms.

#ifndef SSFKIT_TESTS_SUPPORT_HPP
#define SSFKIT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ssfkit/regex.hpp"
#include "ssfkit/ssf.hpp"
#include "ssfkit/word.hpp"

namespace ssfkit::testing {

inline std::uint64_t& base_seed() {
  static std::uint64_t seed = 20260101;
  return seed;
}

inline std::mt19937_64 rng(std::uint64_t stream) { return std::mt19937_64(base_seed() * 1000003ULL + stream); }

inline const AlphabetPtr& ab() {
  static const AlphabetPtr alpha = Alphabet::of("ab");
  return alpha;
}

// Word over {a, b}; "" and "()" both give the empty word.
inline Word W(std::string_view text) { return Word::parse(ab(), text); }
inline Word W(const AlphabetPtr& alpha, std::string_view text) { return Word::parse(alpha, text); }

inline std::set<Word> Ws(const AlphabetPtr& alpha, std::initializer_list<std::string_view> items) {
  std::set<Word> out;
  for (auto t : items) out.insert(Word::parse(alpha, t));
  return out;
}
inline std::set<Word> Ws(std::initializer_list<std::string_view> items) { return Ws(ab(), items); }

inline FiniteLanguage L(const AlphabetPtr& alpha, std::initializer_list<std::string_view> items) {
  auto s = Ws(alpha, items);
  return FiniteLanguage(alpha, std::vector<Word>(s.begin(), s.end()));
}
inline FiniteLanguage L(std::initializer_list<std::string_view> items) { return L(ab(), items); }

inline Word random_word(std::mt19937_64& gen, const AlphabetPtr& alpha, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(alpha->size() - 1));
  std::vector<Symbol> s(len(gen));
  for (auto& c : s) c = sym(gen);
  return Word(alpha, std::move(s));
}

// Sliding-window count over plain symbol vectors.
inline std::size_t naive_count(const Word& w, const Word& x) {
  if (x.size() > w.size()) return 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i + x.size() <= w.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < x.size() && match; ++j) match = w[i + j] == x[j];
    n += match;
  }
  return n;
}

// Compares counts of every factor of length <= k.
inline bool naive_equivalent(const Word& u, const Word& v, std::size_t k) {
  for (const Word& x : all_words_up_to(u.alphabet(), k)) {
    if (naive_count(u, x) != naive_count(v, x)) return false;
  }
  return true;
}

inline bool naive_is_ssf(const std::set<Word>& xs, const std::vector<Word>& words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      bool split = false;
      for (const Word& x : xs) split = split || naive_count(words[i], x) != naive_count(words[j], x);
      if (!split) return false;
    }
  }
  return true;
}

// Recursive regex matcher over the AST: the set of end positions reachable
// from `start` while matching `node`.
inline std::set<std::size_t> match_ends(const RegexNode& node, const Word& w, std::size_t start) {
  using K = RegexNode::Kind;
  switch (node.kind) {
    case K::kEmptySet:
      return {};
    case K::kEpsilon:
      return {start};
    case K::kSymbol:
      if (start < w.size() && w[start] == node.symbol) return {start + 1};
      return {};
    case K::kUnion: {
      std::set<std::size_t> out;
      for (const auto& c : node.children) out.merge(match_ends(*c, w, start));
      return out;
    }
    case K::kConcat: {
      std::set<std::size_t> cur{start};
      for (const auto& c : node.children) {
        std::set<std::size_t> next;
        for (std::size_t p : cur) next.merge(match_ends(*c, w, p));
        cur = std::move(next);
      }
      return cur;
    }
    case K::kStar: {
      std::set<std::size_t> seen{start};
      std::vector<std::size_t> todo{start};
      while (!todo.empty()) {
        std::size_t p = todo.back();
        todo.pop_back();
        for (std::size_t q : match_ends(*node.children.front(), w, p)) {
          if (seen.insert(q).second) todo.push_back(q);
        }
      }
      return seen;
    }
  }
  return {};
}

inline bool ast_matches(const Regex& re, const Word& w) { return match_ends(re.root(), w, 0).count(w.size()) > 0; }

// Random regex text over {a, b} with at most `max_stars` stars.
inline std::string random_regex(std::mt19937_64& gen, int max_stars) {
  int stars = 0;
  std::function<std::string(int)> build = [&](int depth) -> std::string {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
    switch (pick(gen)) {
      case 0:
        return "a";
      case 1:
        return "b";
      case 2:
      case 3:
        return build(depth - 1) + build(depth - 1);
      case 4:
        return "(" + build(depth - 1) + "|" + build(depth - 1) + ")";
      default:
        if (stars < max_stars) {
          ++stars;
          return "(" + build(depth - 1) + ")*";
        }
        return build(depth - 1);
    }
  };
  return build(4);
}

}  // namespace ssfkit::testing

#endif  // SSFKIT_TESTS_SUPPORT_HPP
