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

#include "ssfkit/kabelian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ssfkit {

KSignature signature(const Word& w, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (w.size() + 1 < k) return KSignature(k, KSignature::Short{w});
  KSignature::Long form{w.prefix(k - 1), {}, w.size()};
  for (std::size_t i = 0; i + k <= w.size(); ++i) ++form.counts[w.substr(i, k)];
  return KSignature(k, std::move(form));
}

bool equivalent(const Word& u, const Word& v, std::size_t k) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw AlphabetMismatch();
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (u.size() != v.size()) return false;
  return signature(u, k) == signature(v, k);
}

std::vector<std::vector<Word>> partition(std::span<const Word> words, std::size_t k) {
  std::set<Word> distinct(words.begin(), words.end());
  std::unordered_map<KSignature, std::vector<Word>> buckets;
  for (const Word& w : distinct) buckets[signature(w, k)].push_back(w);
  std::vector<std::vector<Word>> classes;
  classes.reserve(buckets.size());
  for (auto& [sig, members] : buckets) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

std::size_t growth(std::span<const Word> language, std::size_t n) {
  std::set<Word> distinct;
  for (const Word& w : language) {
    if (w.size() == n) distinct.insert(w);
  }
  return distinct.size();
}

std::size_t kgrowth(std::span<const Word> language, std::size_t k, std::size_t n) {
  std::vector<Word> slice;
  for (const Word& w : language) {
    if (w.size() == n) slice.push_back(w);
  }
  return partition(slice, k).size();
}

GrowthTable growth_table(std::span<const Word> language) {
  GrowthTable table;
  for (const Word& w : std::set<Word>(language.begin(), language.end())) ++table[w.size()];
  return table;
}

GrowthTable kgrowth_table(std::span<const Word> language, std::size_t k) {
  GrowthTable table;
  for (const auto& cls : partition(language, k)) ++table[cls.front().size()];
  return table;
}

}  // namespace ssfkit

std::size_t std::hash<ssfkit::KSignature>::operator()(const ssfkit::KSignature& s) const noexcept {
  std::hash<ssfkit::Word> hw;
  std::size_t h = s.k() * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (const auto* sh = std::get_if<ssfkit::KSignature::Short>(&s.form())) {
    mix(hw(sh->word));
  } else {
    const auto& lf = std::get<ssfkit::KSignature::Long>(s.form());
    mix(hw(lf.prefix));
    mix(lf.total_length);
    for (const auto& [x, c] : lf.counts) {
      mix(hw(x));
      mix(c);
    }
  }
  return h;
}
