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

// Infinite words: ultimately periodic words u v^ω and fixed points of
// prolongable morphisms (optionally passed through a letter-to-letter coding).
//
// Factor sets of ultimately periodic words are exact. Morphic words are only
// ever seen through a finite prefix, so their factor sets are lower
// approximations and every result derived from them says so.

#ifndef SSFKIT_INFINITE_HPP
#define SSFKIT_INFINITE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "ssfkit/word.hpp"

namespace ssfkit {

// Canonical u v^ω: v primitive, and u is empty or ends in a different symbol
// than v (so the preperiod is as short as possible and v is not a suffix of u).
class UPWord {
 public:
  // Throws std::invalid_argument unless (u, v) is already canonical.
  static UPWord from_canonical(Word u, Word v);

  const Word& preperiod() const { return u_; }
  const Word& period() const { return v_; }

  friend bool operator==(const UPWord&, const UPWord&) = default;

 private:
  UPWord(Word u, Word v) : u_(std::move(u)), v_(std::move(v)) {}
  Word u_;
  Word v_;
};

bool is_canonical(const Word& u, const Word& v);
UPWord canonicalize(const Word& u, const Word& v);

// |u| + |v| + 1: no two distinct factors of u v^ω are equivalent at this k.
std::size_t separating_k(const UPWord& w);

struct Morphism {
  AlphabetPtr alphabet;                  // domain and range of the morphism
  std::map<Symbol, Word> images;         // every symbol maps to a nonempty word
  AlphabetPtr output;                    // coding range
  std::map<Symbol, Symbol> coding;       // letter-to-letter; identity when empty
  Symbol seed = 0;
};

class WordSource {
 public:
  static WordSource periodic(UPWord w);
  // Throws unless images(seed) starts with seed and has length >= 2.
  static WordSource morphic(Morphism m);

  static WordSource thue_morse();  // a -> ab, b -> ba
  static WordSource fibonacci();   // a -> ab, b -> a

  // "thue-morse", "fibonacci", "up:U,V" (ε as "()"), or a morphism
  // "a>ab,b>ba seed=a coding=identity" (coding may also be "a>0,b>1").
  static WordSource parse(std::string_view text);

  bool is_periodic() const { return std::holds_alternative<UPWord>(kind_); }
  const UPWord* periodic_word() const { return std::get_if<UPWord>(&kind_); }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::string description() const { return description_; }

  // First n symbols; consistent across calls.
  Word prefix(std::size_t n) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::vector<Symbol> raw;  // morphism iterate before coding
  };

  WordSource(std::variant<UPWord, Morphism> kind, AlphabetPtr alphabet, std::string description);

  std::variant<UPWord, Morphism> kind_;
  AlphabetPtr alphabet_;
  std::string description_;
  std::shared_ptr<Memo> memo_;
};

inline constexpr std::size_t kDefaultMorphicPrefix = std::size_t{1} << 14;

struct FactorSet {
  std::set<Word> factors;
  bool approximate = false;
};

FactorSet factor_set(const WordSource& src, std::size_t n, std::size_t morphic_prefix = kDefaultMorphicPrefix);

struct Count {
  std::size_t value = 0;
  bool approximate = false;
};

Count complexity(const WordSource& src, std::size_t n, std::size_t morphic_prefix = kDefaultMorphicPrefix);
Count kcomplexity(const WordSource& src, std::size_t k, std::size_t n,
                  std::size_t morphic_prefix = kDefaultMorphicPrefix);

struct ComplexityRow {
  std::size_t n = 0;
  std::size_t factors = 0;
  std::vector<std::size_t> classes;  // one per requested k
};

struct ComplexityProfile {
  std::vector<std::size_t> ks;
  std::vector<ComplexityRow> rows;
  bool approximate = false;
};

ComplexityProfile complexity_profile(const WordSource& src, std::size_t n_max, const std::vector<std::size_t>& ks,
                                     std::size_t morphic_prefix = kDefaultMorphicPrefix);

struct EquivalentPair {
  Word first;
  Word second;
  std::size_t length = 0;
};

// Two distinct k-abelian equivalent factors of the smallest length n <= n_max
// that has any; the lexicographically least such pair.
std::optional<EquivalentPair> find_equivalent_pair(const WordSource& src, std::size_t k, std::size_t n_max,
                                                   std::size_t morphic_prefix = kDefaultMorphicPrefix);

}  // namespace ssfkit

#endif  // SSFKIT_INFINITE_HPP
