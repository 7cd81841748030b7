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

#include "ssfkit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <unordered_map>

#include "ssfkit/combinatorics.hpp"
#include "ssfkit/kabelian.hpp"

namespace ssfkit {
namespace {

std::string trim(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

// Bytes >= 0x80 belong to multi-byte code points and count as letters.
bool all_letters(const std::string& word) {
  return std::all_of(word.begin(), word.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalpha(u);
  });
}

Corpus build(std::vector<std::string> lines, std::string source, const CorpusOptions& options) {
  Corpus corpus{FiniteLanguage(options.alphabet ? options.alphabet : Alphabet::of("a")), std::move(source),
                options.fold_case, 0, 0};
  std::set<std::string> kept;
  for (auto& raw : lines) {
    std::string word = trim(raw);
    if (word.empty() || word.front() == '#') continue;
    if (options.fold_case) {
      for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (!all_letters(word)) {
      ++corpus.rejected;
      continue;
    }
    if (!kept.insert(word).second) ++corpus.duplicates;
  }
  AlphabetPtr alphabet = options.alphabet;
  if (!alphabet) {
    std::string letters;
    for (const auto& w : kept) letters += w;
    alphabet = letters.empty() ? Alphabet::of("a") : Alphabet::sorted_from(letters);
  }
  std::vector<Word> words;
  words.reserve(kept.size());
  for (const auto& w : kept) words.push_back(Word::parse(alphabet, w));
  corpus.words = FiniteLanguage(alphabet, std::move(words));
  return corpus;
}

}  // namespace

Corpus read_corpus(std::istream& in, std::string source, const CorpusOptions& options) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  if (in.bad()) throw CorpusError("cannot read corpus '" + source + "'");
  return build(std::move(lines), std::move(source), options);
}

Corpus load_corpus(const std::string& path, const CorpusOptions& options) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus '" + path + "'");
  return read_corpus(in, path, options);
}

Corpus corpus_from_words(const std::vector<std::string>& words, const CorpusOptions& options) {
  return build(words, "<inline>", options);
}

std::vector<std::pair<Word, Word>> scan_corpus(const Corpus& corpus, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  std::unordered_map<KSignature, std::vector<const Word*>> buckets;
  for (const Word& w : corpus.words.words()) buckets[signature(w, k)].push_back(&w);
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& [sig, members] : buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) pairs.emplace_back(*members[i], *members[j]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

SsfCandidate suggest_ssf(const Corpus& corpus, std::size_t base_k) {
  if (base_k == 0) throw std::invalid_argument("base_k must be >= 1");
  const auto& alphabet = corpus.words.alphabet();
  const auto base = all_words_up_to(alphabet, base_k);
  SsfCandidate chosen(base.begin(), base.end());

  // With every factor of length <= base_k counted, residual collisions are
  // exactly the base_k-abelian equivalent pairs.
  auto residual = scan_corpus(corpus, base_k);
  while (!residual.empty()) {
    std::set<Word> pool;
    for (const auto& [u, v] : residual) {
      for (const Word* w : {&u, &v}) {
        for (const Word& f : factors_up_to(*w, w->size())) {
          if (f.size() > base_k) pool.insert(f);
        }
      }
    }
    const Word* best = nullptr;
    std::size_t best_split = 0;
    for (const Word& f : pool) {
      std::size_t split = 0;
      for (const auto& [u, v] : residual) split += count_occurrences(u, f) != count_occurrences(v, f);
      if (split > best_split) {
        best_split = split;
        best = &f;
      }
    }
    chosen.insert(*best);
    std::erase_if(residual, [best](const auto& pair) {
      return count_occurrences(pair.first, *best) != count_occurrences(pair.second, *best);
    });
  }
  return chosen;
}

}  // namespace ssfkit
