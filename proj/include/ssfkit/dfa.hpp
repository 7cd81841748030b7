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

// Minimal trim DFAs and the product constructions the finite-SSF decision
// runs on.
//
// Every Dfa is complete, minimal and trim. Live states (reachable and
// co-reachable) are numbered 0..live_count()-1 in breadth-first order from
// the start state, exploring symbols in alphabet order; the single dead
// state has number live_count(). The empty language has no live states and
// starts in the dead state.

#ifndef SSFKIT_DFA_HPP
#define SSFKIT_DFA_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ssfkit/regex.hpp"
#include "ssfkit/word.hpp"

namespace ssfkit {

class Dfa {
 public:
  using State = std::size_t;

  // Normalizes an arbitrary complete automaton: `next[q][s]` must be a valid
  // state for every q and symbol s.
  static Dfa from_table(AlphabetPtr alphabet, const std::vector<std::vector<State>>& next, State start,
                        const std::vector<bool>& accepting);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t live_count() const { return accepting_.size(); }
  State dead() const { return live_count(); }
  State start() const { return start_; }
  bool empty() const { return live_count() == 0; }
  bool is_live(State q) const { return q < live_count(); }
  bool accepting(State q) const { return is_live(q) && accepting_[q]; }
  State next(State q, Symbol s) const { return is_live(q) ? next_[q][s] : dead(); }

  State run(State from, const Word& w) const;
  bool accepts(const Word& w) const { return accepting(run(start_, w)); }

 private:
  Dfa(AlphabetPtr alphabet, std::vector<std::vector<State>> next, State start, std::vector<bool> accepting)
      : alphabet_(std::move(alphabet)), next_(std::move(next)), start_(start), accepting_(std::move(accepting)) {}

  AlphabetPtr alphabet_;
  std::vector<std::vector<State>> next_;  // live states only
  State start_;
  std::vector<bool> accepting_;
};

Dfa compile(const Regex& regex);

// Language read from state `from` of `a` and `from_b` of `b` in lockstep,
// accepting where `accept(qa, qb)` holds. Both must share an alphabet.
Dfa product(const Dfa& a, Dfa::State from_a, const Dfa& b, Dfa::State from_b,
            const std::function<bool(Dfa::State, Dfa::State)>& accept);

// {w : w leads q1 to q1 and q2 to q2}.
Dfa loop_language(const Dfa& dfa, Dfa::State q1, Dfa::State q2);
// {y : y leads q1 to q2}.
Dfa path_language(const Dfa& dfa, Dfa::State q1, Dfa::State q2);
// L(a) \ L(b).
Dfa difference(const Dfa& a, const Dfa& b);
// The (|p|+1)-state cyclic recognizer of p* (dead state included).
Dfa power_star(const AlphabetPtr& alphabet, const Word& p);

// Breadth-first shortest accepted word, lexicographically least among the
// shortest. With require_nonempty the empty word is not considered.
std::optional<Word> shortest_word(const Dfa& dfa, bool require_nonempty = false);
// Shortest word leading from q1 to q2.
std::optional<Word> shortest_path(const Dfa& dfa, Dfa::State q1, Dfa::State q2);

// L(dfa) ⊆ p*, for primitive p.
bool subset_of_pstar(const Dfa& dfa, const Word& p);

// All accepted words of length <= max_len, shortlex order.
std::vector<Word> enumerate(const Dfa& dfa, std::size_t max_len);

}  // namespace ssfkit

#endif  // SSFKIT_DFA_HPP
