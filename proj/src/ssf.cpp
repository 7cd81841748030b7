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

#include "ssfkit/ssf.hpp"

#include <algorithm>
#include <map>

#include "ssfkit/combinatorics.hpp"
#include "ssfkit/hitting_set.hpp"

namespace ssfkit {

FiniteLanguage::FiniteLanguage(AlphabetPtr alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  if (!alphabet_) throw std::invalid_argument("language needs an alphabet");
  for (const Word& w : words_) {
    if (!same_alphabet(alphabet_, w.alphabet())) throw AlphabetMismatch();
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

FiniteLanguage FiniteLanguage::parse(AlphabetPtr alphabet, const std::vector<std::string>& words) {
  std::vector<Word> parsed;
  parsed.reserve(words.size());
  for (const auto& text : words) parsed.push_back(Word::parse(alphabet, text));
  return FiniteLanguage(std::move(alphabet), std::move(parsed));
}

bool FiniteLanguage::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

ProfileVector profile(const Word& w, const SsfCandidate& candidates) {
  ProfileVector p{w, {}};
  p.counts.reserve(candidates.size());
  for (const Word& x : candidates) p.counts.push_back(count_occurrences(w, x));
  return p;
}

SsfCheck is_ssf(const SsfCandidate& candidates, const FiniteLanguage& language) {
  // Words arrive in shortlex order, so each group lists its members sorted.
  std::map<std::vector<std::size_t>, std::vector<const Word*>> groups;
  for (const Word& w : language.words()) groups[profile(w, candidates).counts].push_back(&w);
  SsfCheck check;
  for (const auto& [counts, members] : groups) {
    if (members.size() < 2) continue;
    std::pair<Word, Word> pair{*members[0], *members[1]};
    if (!check.counterexample || pair < *check.counterexample) check.counterexample = std::move(pair);
  }
  return check;
}

SsfCandidate trivial_ssf(const FiniteLanguage& language) {
  if (language.empty()) throw std::invalid_argument("trivial_ssf: empty language");
  return SsfCandidate(std::next(language.words().begin()), language.words().end());
}

SsfCandidate inclusion_minimalize(const SsfCandidate& candidates, const FiniteLanguage& language) {
  if (!is_ssf(candidates, language)) throw NotSeparating("inclusion_minimalize: candidate set does not separate");
  SsfCandidate current = candidates;
  // Separation is monotone under supersets, so one pass suffices.
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    current.erase(*it);
    if (!is_ssf(current, language)) current.insert(*it);
  }
  return current;
}

SsfCandidate default_universe(const FiniteLanguage& language) {
  SsfCandidate universe{Word(language.alphabet())};
  for (const Word& w : language.words()) universe.merge(factors_up_to(w, w.size()));
  return universe;
}

namespace {

// Elements are unordered pairs of distinct words; candidate x covers the
// pairs whose members disagree on |.|_x.
HittingSetInstance pair_instance(const FiniteLanguage& language, const std::vector<Word>& universe) {
  const auto& words = language.words();
  const std::size_t n = words.size();
  std::vector<std::vector<std::size_t>> counts(n);
  for (std::size_t i = 0; i < n; ++i) {
    counts[i].reserve(universe.size());
    for (const Word& x : universe) counts[i].push_back(count_occurrences(words[i], x));
  }
  HittingSetInstance inst;
  inst.num_elements = n * (n - (n > 0 ? 1 : 0)) / 2;
  inst.candidates.assign(universe.size(), Bitset(inst.num_elements));
  std::size_t pair = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++pair) {
      for (std::size_t c = 0; c < universe.size(); ++c) {
        if (counts[i][c] != counts[j][c]) inst.candidates[c].set(pair);
      }
    }
  }
  return inst;
}

SsfCandidate pick(const std::vector<Word>& universe, const std::vector<std::size_t>& indices) {
  SsfCandidate out;
  for (std::size_t i : indices) out.insert(universe[i]);
  return out;
}

}  // namespace

std::vector<SsfCandidate> enumerate_inclusion_minimal(const FiniteLanguage& language, const SsfCandidate& universe,
                                                      std::size_t max_universe) {
  if (universe.size() > max_universe) {
    throw UniverseTooLarge("universe has " + std::to_string(universe.size()) + " words, cap is " +
                           std::to_string(max_universe));
  }
  if (!is_ssf(universe, language)) throw NotSeparating("enumerate_inclusion_minimal: universe does not separate");
  const std::vector<Word> ordered(universe.begin(), universe.end());
  std::vector<SsfCandidate> out;
  for (const auto& sel : minimal_hitting_sets(pair_instance(language, ordered))) out.push_back(pick(ordered, sel));
  return out;
}

SsfCandidate size_minimal(const FiniteLanguage& language, const SsfCandidate& universe, SizeMinimalLimits limits) {
  const std::size_t n = language.size();
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (n > limits.max_words || pairs > limits.max_pairs) {
    throw UniverseTooLarge("size_minimal: instance has " + std::to_string(n) + " words / " + std::to_string(pairs) +
                           " pairs, caps are " + std::to_string(limits.max_words) + " / " +
                           std::to_string(limits.max_pairs));
  }
  if (!is_ssf(universe, language)) throw NotSeparating("size_minimal: universe does not separate");
  const std::vector<Word> ordered(universe.begin(), universe.end());
  auto best = minimum_hitting_set(pair_instance(language, ordered));
  return pick(ordered, best.value());
}

SsfCandidate size_minimal(const FiniteLanguage& language, SizeMinimalLimits limits) {
  return size_minimal(language, default_universe(language), limits);
}

CommonRoot common_root(const FiniteLanguage& language) {
  std::optional<Word> root;
  for (const Word& w : language.words()) {
    if (w.empty()) continue;
    Word r = primitive_root(w);
    if (!root) {
      root = std::move(r);
    } else if (r != *root) {
      return {CommonRoot::Kind::kNone, std::nullopt};
    }
  }
  if (!root) return {CommonRoot::Kind::kUnconstrained, std::nullopt};
  return {CommonRoot::Kind::kRoot, std::move(root)};
}

SsfCandidate union_with_finite_ssf(const SsfCandidate& candidates, const FiniteLanguage& extra) {
  SsfCandidate out = candidates;
  out.insert(extra.words().begin(), extra.words().end());
  out.insert(Word(extra.alphabet()));
  return out;
}

std::pair<Word, Word> half_main_pair(const Word& x, const Word& w, const Word& y, const Word& z, std::size_t k) {
  if (k == 0) throw std::invalid_argument("half_main_pair: k must be >= 1");
  if (commute(w, y)) throw std::invalid_argument("half_main_pair: w and y commute");
  return {x + w.pow(k) + y + w.pow(k - 1) + z, x + w.pow(k - 1) + y + w.pow(k) + z};
}

}  // namespace ssfkit
