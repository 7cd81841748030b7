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

#include "ssfkit/regular.hpp"

#include "ssfkit/combinatorics.hpp"

namespace ssfkit {

FiniteSsfDecision decide_finite_ssf(const Dfa& dfa) {
  const auto& alphabet = dfa.alphabet();
  for (Dfa::State q1 = 0; q1 < dfa.live_count(); ++q1) {
    for (Dfa::State q2 = 0; q2 < dfa.live_count(); ++q2) {
      const Dfa loops = loop_language(dfa, q1, q2);
      const auto shortest_loop = shortest_word(loops, /*require_nonempty=*/true);
      if (!shortest_loop) continue;
      const Dfa paths = path_language(dfa, q1, q2);
      if (paths.empty()) continue;

      const Word p = primitive_root(*shortest_loop);
      const Dfa root_star = power_star(alphabet, p);
      const auto stray_path = shortest_word(difference(paths, root_star));
      const auto stray_loop = shortest_word(difference(loops, root_star));
      if (!stray_path && !stray_loop) continue;

      Witness wit{*shortest_path(dfa, dfa.start(), q1), *shortest_loop, Word(alphabet), Word(alphabet)};
      if (stray_path) {
        wit.y = *stray_path;
      } else {
        // A loop outside p* appended to any connecting word leaves p* too.
        wit.y = *shortest_word(paths) + *stray_loop;
      }
      std::optional<Word> tail;
      for (Dfa::State f = 0; f < dfa.live_count(); ++f) {
        if (!dfa.accepting(f)) continue;
        auto candidate = shortest_path(dfa, q2, f);
        if (candidate && (!tail || *candidate < *tail)) tail = std::move(candidate);
      }
      wit.z = *tail;
      return {false, std::move(wit), std::make_pair(q1, q2)};
    }
  }
  return {};
}

bool verify_witness(const Dfa& dfa, const Witness& witness, std::size_t imax) {
  if (commute(witness.w, witness.y)) return false;
  for (std::size_t i = 0; i <= imax; ++i) {
    for (std::size_t j = 0; j <= imax; ++j) {
      if (!dfa.accepts(witness.x + witness.w.pow(i) + witness.y + witness.w.pow(j) + witness.z)) return false;
    }
  }
  return true;
}

bool is_bounded(const Dfa& dfa) {
  for (Dfa::State q = 0; q < dfa.live_count(); ++q) {
    const Dfa loops = path_language(dfa, q, q);
    const auto shortest_loop = shortest_word(loops, /*require_nonempty=*/true);
    if (!shortest_loop) continue;
    if (!subset_of_pstar(loops, primitive_root(*shortest_loop))) return false;
  }
  return true;
}

}  // namespace ssfkit
