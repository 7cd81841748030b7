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

// Bounded expressions: finite unions of u0 v1* u1 v2* u2 ... vn* un.
//
// Text form: terms separated by ';'. Inside a term, a glyph or a
// parenthesized word followed by '*' is a starred block, anything else is
// literal. "()" is the empty word. Example: "a* b (ab)*; ()".

#ifndef SSFKIT_BOUNDED_HPP
#define SSFKIT_BOUNDED_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ssfkit/regex.hpp"
#include "ssfkit/ssf.hpp"
#include "ssfkit/word.hpp"

namespace ssfkit {

struct BoundedBlock {
  Word star;  // v_j, nonempty
  Word tail;  // u_j
};

struct BoundedTerm {
  Word head;  // u_0
  std::vector<BoundedBlock> blocks;

  // |u0 v1^e u1 ... vn^e un|
  std::size_t length_with_exponent(std::size_t e) const;
};

class BoundedExpr {
 public:
  BoundedExpr(AlphabetPtr alphabet, std::vector<BoundedTerm> terms);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<BoundedTerm>& terms() const { return terms_; }
  bool has_stars() const;

  std::string str() const;
  Regex to_regex() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<BoundedTerm> terms_;
};

BoundedExpr parse_bounded(std::string_view text, AlphabetPtr alphabet);
BoundedExpr parse_bounded(std::string_view text);

struct NkpParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::set<Word> roots;  // Lyndon roots of every starred block
};

// Star-free input: roots empty and n = k = max length + 1. Otherwise
// n = 2 max_i |u0 v1 u1 ... vr ur| and k = max_i |u0 v1^(n+2) u1 ... vr^(n+2) ur|.
NkpParameters nkp_parameters(const BoundedExpr& expr);

struct NkpReport {
  // Condition 1: distinct roots share no factor of length n in any powers.
  bool condition1 = true;
  std::vector<std::pair<Word, Word>> overlapping_roots;

  // Condition 2: each checked word has at most one maximal p^(>=n)-occurrence
  // per root. Offending words are listed with the term and the two starred
  // blocks that carry the separate runs.
  struct MultiRun {
    Word word;
    Word root;
    std::size_t term = 0;
    std::size_t first_block = 0;
    std::size_t second_block = 0;
  };
  bool condition2 = true;
  std::vector<MultiRun> multi_runs;

  // Condition 3: every factor of length >= k has a factor p^(n+1).
  struct BareFactor {
    Word word;
    Word factor;
  };
  bool condition3 = true;
  std::vector<BareFactor> bare_factors;

  std::size_t words_checked = 0;

  bool all_pass() const { return condition1 && condition2 && condition3; }
};

// Checks the three conditions on every word of length <= len_cap. At most
// `max_examples` offending items are recorded per condition.
NkpReport check_nkp_conditions(const BoundedExpr& expr, const NkpParameters& params, std::size_t len_cap,
                               std::size_t max_examples = 10);

// Every word of the expression with length <= max_len.
FiniteLanguage bexpr_enumerate(const BoundedExpr& expr, std::size_t max_len);

}  // namespace ssfkit

#endif  // SSFKIT_BOUNDED_HPP
