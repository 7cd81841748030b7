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

// Separating sets of factors.
//
// X separates L when any two distinct words of L differ in the number of
// occurrences of at least one x in X. Everything here works on finite
// languages and finite candidate sets; ties are always broken by shortlex
// order so results are reproducible.

#ifndef SSFKIT_SSF_HPP
#define SSFKIT_SSF_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ssfkit/word.hpp"

namespace ssfkit {

// A finite set of words over one alphabet, kept deduplicated in shortlex order.
class FiniteLanguage {
 public:
  explicit FiniteLanguage(AlphabetPtr alphabet, std::vector<Word> words = {});
  static FiniteLanguage parse(AlphabetPtr alphabet, const std::vector<std::string>& words);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(const Word& w) const;

  friend bool operator==(const FiniteLanguage& a, const FiniteLanguage& b) { return a.words_ == b.words_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> words_;
};

using SsfCandidate = std::set<Word>;

struct ProfileVector {
  Word word;
  std::vector<std::size_t> counts;
};

// Occurrence counts of every candidate (in set order) in `w`.
ProfileVector profile(const Word& w, const SsfCandidate& candidates);

struct SsfCheck {
  // The shortlex-least colliding pair (first < second) when X fails.
  std::optional<std::pair<Word, Word>> counterexample;

  bool separating() const { return !counterexample.has_value(); }
  explicit operator bool() const { return separating(); }
};

SsfCheck is_ssf(const SsfCandidate& candidates, const FiniteLanguage& language);

// L minus its shortlex-least word. Throws on an empty language.
SsfCandidate trivial_ssf(const FiniteLanguage& language);

// Greedy single pass dropping members longest first (lex descending within a
// length) whenever the rest still separates. Throws when X does not separate.
SsfCandidate inclusion_minimalize(const SsfCandidate& candidates, const FiniteLanguage& language);

// {ε} together with every factor of every word of L.
SsfCandidate default_universe(const FiniteLanguage& language);

class UniverseTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSeparating : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// All inclusion-minimal SSFs of L contained in `universe`, ordered by size,
// then by the shortlex order of their sorted members.
std::vector<SsfCandidate> enumerate_inclusion_minimal(const FiniteLanguage& language, const SsfCandidate& universe,
                                                      std::size_t max_universe = 20);

struct SizeMinimalLimits {
  std::size_t max_words = 40;
  std::size_t max_pairs = 5000;
};

// A minimum-cardinality SSF of L inside `universe`; among minimum ones the
// one whose sorted member list is shortlex-least.
SsfCandidate size_minimal(const FiniteLanguage& language, const SsfCandidate& universe,
                          SizeMinimalLimits limits = {});
SsfCandidate size_minimal(const FiniteLanguage& language, SizeMinimalLimits limits = {});

// The primitive p with L ⊆ p*, if any. L* has a finite SSF exactly when the
// result is not `none`.
struct CommonRoot {
  enum class Kind { kUnconstrained, kRoot, kNone };
  Kind kind = Kind::kNone;
  std::optional<Word> root;
};
CommonRoot common_root(const FiniteLanguage& language);

// X ∪ F ∪ {ε}: separates L ∪ F whenever X separates L.
SsfCandidate union_with_finite_ssf(const SsfCandidate& candidates, const FiniteLanguage& extra);

// (x w^k y w^(k-1) z, x w^(k-1) y w^k z): distinct, k-abelian equivalent, and
// both in x w* y w* z. Requires wy != yw and k >= 1.
std::pair<Word, Word> half_main_pair(const Word& x, const Word& w, const Word& y, const Word& z, std::size_t k);

}  // namespace ssfkit

#endif  // SSFKIT_SSF_HPP
