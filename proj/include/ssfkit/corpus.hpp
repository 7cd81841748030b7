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

// Wordlist corpora: one word per line, '#' starts a comment line.

#ifndef SSFKIT_CORPUS_HPP
#define SSFKIT_CORPUS_HPP

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ssfkit/ssf.hpp"
#include "ssfkit/word.hpp"

namespace ssfkit {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusOptions {
  bool fold_case = true;
  AlphabetPtr alphabet;  // discovered from the words when null
};

struct Corpus {
  FiniteLanguage words;
  std::string source;
  bool case_folded = true;
  std::size_t duplicates = 0;  // lines dropped as repeats after normalization
  std::size_t rejected = 0;    // lines dropped for containing non-letters
};

Corpus read_corpus(std::istream& in, std::string source, const CorpusOptions& options = {});
Corpus load_corpus(const std::string& path, const CorpusOptions& options = {});
Corpus corpus_from_words(const std::vector<std::string>& words, const CorpusOptions& options = {});

// Unordered pairs (first < second in shortlex) of distinct k-abelian
// equivalent corpus words, sorted.
std::vector<std::pair<Word, Word>> scan_corpus(const Corpus& corpus, std::size_t k);

// Sigma^(<= base_k) plus longer factors picked greedily until every word is
// separated. Greedy picks the factor splitting the most residual pairs,
// shortlex-least on ties.
SsfCandidate suggest_ssf(const Corpus& corpus, std::size_t base_k);

}  // namespace ssfkit

#endif  // SSFKIT_CORPUS_HPP
