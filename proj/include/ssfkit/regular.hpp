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

// Finite-SSF decision for regular languages.
//
// A regular language has a finite SSF exactly when it contains no subset
// x w* y w* z with wy != yw. On a minimal trim DFA such a subset exists iff
// some ordered pair of live states (q1, q2) admits a nonempty word w looping
// at both q1 and q2 and a word y from q1 to q2 that does not commute with w.
// Writing p for the primitive root of the shortest such loop, the pair is
// harmless exactly when every loop and every connecting word lies in p*.

#ifndef SSFKIT_REGULAR_HPP
#define SSFKIT_REGULAR_HPP

#include <cstddef>
#include <optional>
#include <utility>

#include "ssfkit/dfa.hpp"
#include "ssfkit/word.hpp"

namespace ssfkit {

// Certifies x w^i y w^j z ∈ L for all i, j >= 0 with wy != yw.
struct Witness {
  Word x;
  Word w;
  Word y;
  Word z;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct FiniteSsfDecision {
  bool has_finite_ssf = true;
  std::optional<Witness> witness;
  // The state pair the witness was read from.
  std::optional<std::pair<Dfa::State, Dfa::State>> states;
};

// Pairs are scanned q1-major in state order; the first offending pair
// supplies the witness.
FiniteSsfDecision decide_finite_ssf(const Dfa& dfa);

// wy != yw and x w^i y w^j z accepted for all 0 <= i, j <= imax.
bool verify_witness(const Dfa& dfa, const Witness& witness, std::size_t imax);

// Every live state's loop language is contained in p* for a single p.
bool is_bounded(const Dfa& dfa);

}  // namespace ssfkit

#endif  // SSFKIT_REGULAR_HPP
