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

// Exact word combinatorics: occurrence counting, primitive and Lyndon roots,
// periodicity, and the occurrence calculus used by the power-occurrence
// arguments (overlap, containment, maximal p+-occurrences).

#ifndef SSFKIT_COMBINATORICS_HPP
#define SSFKIT_COMBINATORICS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "ssfkit/word.hpp"

namespace ssfkit {

// |w|_x: number of positions where x occurs in w. The empty word occurs at
// every one of the |w| + 1 cut positions.
std::size_t count_occurrences(const Word& w, const Word& x);

// Start positions of every occurrence of x in w, ascending.
std::vector<std::size_t> occurrence_positions(const Word& w, const Word& x);

// Smallest p > 0 such that w[i] == w[i + p] for all valid i; |w| for the
// empty word.
std::size_t smallest_period(const Word& w);

Word primitive_root(const Word& w);
bool is_primitive(const Word& w);
bool commute(const Word& u, const Word& v);

// The lexicographically least conjugate of the primitive root.
Word lyndon_root(const Word& w);
bool is_lyndon(const Word& w);

// |u| + |v| - gcd(|u|, |v|).
std::size_t fine_wilf_threshold(const Word& u, const Word& v);

// One occurrence (pre, factor, post) of a factor in a host word. Stored as a
// start offset and length into a shared host; equality is positional.
class Occurrence {
 public:
  Occurrence(std::shared_ptr<const Word> host, std::size_t start, std::size_t length);
  static Occurrence from_triple(const Word& pre, const Word& factor, const Word& post);

  const Word& host() const { return *host_; }
  std::size_t start() const { return start_; }
  std::size_t length() const { return length_; }
  std::size_t end() const { return start_ + length_; }

  Word pre() const { return host_->prefix(start_); }
  Word factor() const { return host_->substr(start_, length_); }
  Word post() const { return host_->suffix(host_->size() - end()); }

  bool same_host(const Occurrence& other) const;

  friend bool operator==(const Occurrence& a, const Occurrence& b) {
    return a.start_ == b.start_ && a.length_ == b.length_ && a.same_host(b);
  }

 private:
  std::shared_ptr<const Word> host_;
  std::size_t start_;
  std::size_t length_;
};

// Overlap length when positive, nullopt otherwise. Throws
// std::invalid_argument when the occurrences live in different hosts.
std::optional<std::size_t> occurrence_overlap(const Occurrence& a, const Occurrence& b);

// Whether `inner` is contained in `outer`: |pre_inner| >= |pre_outer| and
// |post_inner| >= |post_outer|.
bool occurrence_contains(const Occurrence& inner, const Occurrence& outer);

// Maximal p+-occurrences of exponent >= min_exp, ordered by start. Requires p
// primitive and min_exp >= 1.
std::vector<Occurrence> maximal_power_occurrences(const Word& w, const Word& p, std::size_t min_exp);

// Distinct factors of w of length <= max_len, the empty word included.
std::set<Word> factors_up_to(const Word& w, std::size_t max_len);
// Distinct factors of w of length exactly len.
std::set<Word> factors_of_length(const Word& w, std::size_t len);

}  // namespace ssfkit

#endif  // SSFKIT_COMBINATORICS_HPP
