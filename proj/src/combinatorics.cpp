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

#include "ssfkit/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ssfkit {

namespace {

// KMP failure function: fail[i] = length of the longest proper border of x[0..i].
std::vector<std::size_t> failure_function(std::span<const Symbol> x) {
  std::vector<std::size_t> fail(x.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    while (k > 0 && x[i] != x[k]) k = fail[k - 1];
    if (x[i] == x[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

void require_nonempty(const Word& w, const char* what) {
  if (w.empty()) throw std::invalid_argument(std::string(what) + ": empty word");
}

}  // namespace

std::vector<std::size_t> occurrence_positions(const Word& w, const Word& x) {
  if (!same_alphabet(w.alphabet(), x.alphabet())) throw AlphabetMismatch();
  std::vector<std::size_t> out;
  if (x.empty()) {
    out.resize(w.size() + 1);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  if (x.size() > w.size()) return out;
  const auto pat = x.symbols();
  const auto text = w.symbols();
  const auto fail = failure_function(pat);
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pat[k]) k = fail[k - 1];
    if (text[i] == pat[k]) ++k;
    if (k == pat.size()) {
      out.push_back(i + 1 - pat.size());
      k = fail[k - 1];
    }
  }
  return out;
}

std::size_t count_occurrences(const Word& w, const Word& x) {
  if (x.empty()) {
    if (!same_alphabet(w.alphabet(), x.alphabet())) throw AlphabetMismatch();
    return w.size() + 1;
  }
  return occurrence_positions(w, x).size();
}

std::size_t smallest_period(const Word& w) {
  if (w.empty()) return 0;
  return w.size() - failure_function(w.symbols()).back();
}

Word primitive_root(const Word& w) {
  require_nonempty(w, "primitive_root");
  const std::size_t period = smallest_period(w);
  return w.size() % period == 0 ? w.prefix(period) : w;
}

bool is_primitive(const Word& w) {
  require_nonempty(w, "is_primitive");
  return primitive_root(w).size() == w.size();
}

bool commute(const Word& u, const Word& v) { return u + v == v + u; }

Word lyndon_root(const Word& w) {
  const Word root = primitive_root(w);
  const auto s = root.symbols();
  const std::size_t n = s.size();
  // Two-candidate minimal rotation scan; i and j are the competing starts.
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const Symbol a = s[(i + k) % n];
    const Symbol b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  const std::size_t start = std::min(i, j);
  return root.suffix(n - start) + root.prefix(start);
}

bool is_lyndon(const Word& w) { return !w.empty() && lyndon_root(w) == w; }

std::size_t fine_wilf_threshold(const Word& u, const Word& v) {
  require_nonempty(u, "fine_wilf_threshold");
  require_nonempty(v, "fine_wilf_threshold");
  return u.size() + v.size() - std::gcd(u.size(), v.size());
}

Occurrence::Occurrence(std::shared_ptr<const Word> host, std::size_t start, std::size_t length)
    : host_(std::move(host)), start_(start), length_(length) {
  if (!host_ || start_ > host_->size() || length_ > host_->size() - start_) {
    throw std::invalid_argument("occurrence does not fit its host word");
  }
}

Occurrence Occurrence::from_triple(const Word& pre, const Word& factor, const Word& post) {
  return Occurrence(std::make_shared<const Word>(pre + factor + post), pre.size(), factor.size());
}

bool Occurrence::same_host(const Occurrence& other) const {
  return host_ == other.host_ || *host_ == *other.host_;
}

std::optional<std::size_t> occurrence_overlap(const Occurrence& a, const Occurrence& b) {
  if (!a.same_host(b)) throw std::invalid_argument("occurrences belong to different host words");
  const std::size_t lo = std::max(a.start(), b.start());
  const std::size_t hi = std::min(a.end(), b.end());
  if (lo < hi) return hi - lo;
  return std::nullopt;
}

bool occurrence_contains(const Occurrence& inner, const Occurrence& outer) {
  if (!inner.same_host(outer)) throw std::invalid_argument("occurrences belong to different host words");
  return inner.start() >= outer.start() && inner.end() <= outer.end();
}

std::vector<Occurrence> maximal_power_occurrences(const Word& w, const Word& p, std::size_t min_exp) {
  if (p.empty() || !is_primitive(p)) throw std::invalid_argument("maximal_power_occurrences: p must be primitive");
  if (min_exp == 0) throw std::invalid_argument("maximal_power_occurrences: min_exp must be >= 1");
  const std::size_t len = p.size();
  std::vector<char> match(w.size() + 1, 0);
  for (std::size_t pos : occurrence_positions(w, p)) match[pos] = 1;

  // A primitive p cannot occur inside p^2 at a non-multiple offset, so
  // maximal runs are chains pos, pos + |p|, ... that cannot be extended.
  auto host = std::make_shared<const Word>(w);
  std::vector<Occurrence> out;
  for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
    if (!match[pos] || (pos >= len && match[pos - len])) continue;
    std::size_t exp = 0;
    while (pos + (exp + 1) * len <= w.size() && match[pos + exp * len]) ++exp;
    if (exp >= min_exp) out.emplace_back(host, pos, exp * len);
  }
  return out;
}

std::set<Word> factors_of_length(const Word& w, std::size_t len) {
  std::set<Word> out;
  if (len > w.size()) return out;
  for (std::size_t i = 0; i + len <= w.size(); ++i) out.insert(w.substr(i, len));
  return out;
}

std::set<Word> factors_up_to(const Word& w, std::size_t max_len) {
  std::set<Word> out;
  for (std::size_t len = 0; len <= std::min(max_len, w.size()); ++len) out.merge(factors_of_length(w, len));
  return out;
}

}  // namespace ssfkit
