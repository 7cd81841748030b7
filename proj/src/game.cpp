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

#include "ssfkit/game.hpp"

#include <set>
#include <stdexcept>

#include "ssfkit/combinatorics.hpp"
#include "ssfkit/ssf.hpp"

namespace ssfkit {

SsfCandidate static_questions(const FiniteLanguage& language) {
  if (language.size() <= 1) return {};
  try {
    return size_minimal(language);
  } catch (const UniverseTooLarge&) {
    return inclusion_minimalize(trivial_ssf(language), language);
  }
}

Word next_adaptive_question(const std::vector<Word>& candidates, const SsfCandidate& pool) {
  if (candidates.size() < 2) throw std::invalid_argument("adaptive question needs two candidates");
  const Word* best = nullptr;
  std::size_t best_classes = 1;
  for (const Word& x : pool) {
    std::set<std::size_t> answers;
    for (const Word& w : candidates) answers.insert(count_occurrences(w, x));
    if (answers.size() > best_classes) {
      best_classes = answers.size();
      best = &x;
    }
  }
  if (best == nullptr) throw std::invalid_argument("question pool does not split the candidates");
  return *best;
}

namespace {

void ask(const Word& question, const GameOracle& answer, std::vector<Word>& candidates, GameTranscript& transcript) {
  const std::size_t reply = answer(question);
  std::erase_if(candidates, [&](const Word& w) { return count_occurrences(w, question) != reply; });
  transcript.steps.push_back({question, reply, candidates.size()});
}

}  // namespace

GameTranscript run_game(const FiniteLanguage& language, GameMode mode, const GameOracle& answer) {
  if (language.empty()) throw std::invalid_argument("game needs a nonempty language");
  GameTranscript transcript;
  std::vector<Word> candidates = language.words();
  const SsfCandidate questions = static_questions(language);
  if (mode == GameMode::kStatic) {
    for (const Word& x : questions) {
      if (candidates.empty()) break;
      ask(x, answer, candidates, transcript);
    }
  } else {
    while (candidates.size() > 1) ask(next_adaptive_question(candidates, questions), answer, candidates, transcript);
  }
  if (candidates.size() == 1) {
    transcript.identified = candidates.front();
  } else {
    transcript.inconsistent = true;
  }
  return transcript;
}

GameOracle truthful_oracle(Word secret) {
  return [secret = std::move(secret)](const Word& question) { return count_occurrences(secret, question); };
}

}  // namespace ssfkit
