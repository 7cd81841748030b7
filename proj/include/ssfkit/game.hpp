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

// Guessing game: a hidden word from a finite language is identified by asking
// how often given factors occur in it.

#ifndef SSFKIT_GAME_HPP
#define SSFKIT_GAME_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ssfkit/ssf.hpp"
#include "ssfkit/word.hpp"

namespace ssfkit {

enum class GameMode {
  kStatic,    // every question of a size-minimal SSF, fixed in advance
  kAdaptive,  // each question chosen after seeing the previous answers
};

struct GameStep {
  Word question;
  std::size_t answer = 0;
  std::size_t remaining = 0;  // candidates consistent with all answers so far
};

struct GameTranscript {
  std::vector<GameStep> steps;
  std::optional<Word> identified;
  bool inconsistent = false;
};

using GameOracle = std::function<std::size_t(const Word& question)>;

// Static questions: size_minimal on the default universe when the instance is
// small enough, otherwise an inclusion-minimal reduction of the trivial SSF.
SsfCandidate static_questions(const FiniteLanguage& language);

// Adaptive rule: the pool word whose answers split the remaining candidates
// into the most classes, shortlex-least on ties. The game draws from the
// static question set, so it never asks more than the static game does.
Word next_adaptive_question(const std::vector<Word>& candidates, const SsfCandidate& pool);

GameTranscript run_game(const FiniteLanguage& language, GameMode mode, const GameOracle& answer);

// Oracle that answers truthfully for `secret`.
GameOracle truthful_oracle(Word secret);

}  // namespace ssfkit

#endif  // SSFKIT_GAME_HPP
