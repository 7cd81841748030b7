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

// k-abelian equivalence.
//
// Words u, v are k-abelian equivalent when |u|_x = |v|_x for every x of
// length at most k. For words of length >= k - 1 this is the same as sharing
// the prefix of length k - 1 and agreeing on every length-k count, which is
// what KSignature records. Shorter words are only equivalent to themselves.

#ifndef SSFKIT_KABELIAN_HPP
#define SSFKIT_KABELIAN_HPP

#include <cstddef>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "ssfkit/word.hpp"

namespace ssfkit {

class KSignature {
 public:
  // |w| < k - 1: the word is its own class.
  struct Short {
    Word word;
    friend bool operator==(const Short&, const Short&) = default;
  };
  // Length-k counts hold nonzero entries only.
  struct Long {
    Word prefix;
    std::map<Word, std::size_t> counts;
    std::size_t total_length = 0;
    friend bool operator==(const Long&, const Long&) = default;
  };

  KSignature(std::size_t k, std::variant<Short, Long> form) : k_(k), form_(std::move(form)) {}

  std::size_t k() const { return k_; }
  bool is_short() const { return std::holds_alternative<Short>(form_); }
  const std::variant<Short, Long>& form() const { return form_; }

  friend bool operator==(const KSignature&, const KSignature&) = default;

 private:
  std::size_t k_;
  std::variant<Short, Long> form_;
};

// Throws std::invalid_argument when k == 0.
KSignature signature(const Word& w, std::size_t k);

bool equivalent(const Word& u, const Word& v, std::size_t k);

// Equivalence classes of the distinct input words. Each class is sorted
// shortlex; classes are ordered by their smallest member.
std::vector<std::vector<Word>> partition(std::span<const Word> words, std::size_t k);

// Number of words of length n in `language` (duplicates counted once).
std::size_t growth(std::span<const Word> language, std::size_t n);
// Number of k-abelian classes among the words of length n in `language`.
std::size_t kgrowth(std::span<const Word> language, std::size_t k, std::size_t n);

// n -> count, for every length present in `language`.
using GrowthTable = std::map<std::size_t, std::size_t>;
GrowthTable growth_table(std::span<const Word> language);
GrowthTable kgrowth_table(std::span<const Word> language, std::size_t k);

}  // namespace ssfkit

template <>
struct std::hash<ssfkit::KSignature> {
  std::size_t operator()(const ssfkit::KSignature& s) const noexcept;
};

#endif  // SSFKIT_KABELIAN_HPP
