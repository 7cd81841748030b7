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

#include "ssfkit/infinite.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ssfkit/combinatorics.hpp"
#include "ssfkit/kabelian.hpp"

namespace ssfkit {

bool is_canonical(const Word& u, const Word& v) {
  if (v.empty() || !is_primitive(v)) return false;
  return u.empty() || u.back() != v.back();
}

UPWord UPWord::from_canonical(Word u, Word v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw AlphabetMismatch();
  if (!is_canonical(u, v)) throw std::invalid_argument("(" + u.display() + ", " + v.display() + ") is not canonical");
  return UPWord(std::move(u), std::move(v));
}

UPWord canonicalize(const Word& u, const Word& v) {
  if (v.empty()) throw std::invalid_argument("canonicalize: empty period");
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw AlphabetMismatch();
  Word pre = u;
  Word per = primitive_root(v);
  // Pull the preperiod's last symbol into the period while it matches.
  while (!pre.empty() && pre.back() == per.back()) {
    pre = pre.prefix(pre.size() - 1);
    per = per.suffix(1) + per.prefix(per.size() - 1);
  }
  return UPWord::from_canonical(std::move(pre), std::move(per));
}

std::size_t separating_k(const UPWord& w) { return w.preperiod().size() + w.period().size() + 1; }

WordSource::WordSource(std::variant<UPWord, Morphism> kind, AlphabetPtr alphabet, std::string description)
    : kind_(std::move(kind)),
      alphabet_(std::move(alphabet)),
      description_(std::move(description)),
      memo_(std::make_shared<Memo>()) {}

WordSource WordSource::periodic(UPWord w) {
  AlphabetPtr alphabet = w.period().alphabet();
  std::string desc = "up:" + w.preperiod().display() + "," + w.period().display();
  return WordSource(std::move(w), std::move(alphabet), std::move(desc));
}

WordSource WordSource::morphic(Morphism m) {
  if (!m.alphabet) throw std::invalid_argument("morphism needs an alphabet");
  for (Symbol s = 0; s < m.alphabet->size(); ++s) {
    auto it = m.images.find(s);
    if (it == m.images.end() || it->second.empty()) {
      throw std::invalid_argument("morphism: symbol '" + m.alphabet->glyph(s) + "' needs a nonempty image");
    }
    if (!same_alphabet(it->second.alphabet(), m.alphabet)) throw AlphabetMismatch();
  }
  const Word& seed_image = m.images.at(m.seed);
  if (seed_image.size() < 2 || seed_image.front() != m.seed) {
    throw std::invalid_argument("morphism is not prolongable on seed '" + m.alphabet->glyph(m.seed) + "'");
  }
  if (m.coding.empty()) {
    m.output = m.alphabet;
  } else {
    if (!m.output) throw std::invalid_argument("coding needs an output alphabet");
    for (Symbol s = 0; s < m.alphabet->size(); ++s) {
      if (!m.coding.count(s)) throw std::invalid_argument("coding misses symbol '" + m.alphabet->glyph(s) + "'");
    }
  }
  std::string desc;
  for (Symbol s = 0; s < m.alphabet->size(); ++s) {
    desc += (s > 0 ? "," : "") + m.alphabet->glyph(s) + ">" + m.images.at(s).str();
  }
  desc += " seed=" + m.alphabet->glyph(m.seed);
  if (m.coding.empty()) {
    desc += " coding=identity";
  } else {
    desc += " coding=";
    for (Symbol s = 0; s < m.alphabet->size(); ++s) {
      desc += (s > 0 ? "," : "") + m.alphabet->glyph(s) + ">" + m.output->glyph(m.coding.at(s));
    }
  }
  AlphabetPtr out = m.output;
  return WordSource(std::move(m), std::move(out), std::move(desc));
}

namespace {

WordSource binary_morphism(std::string_view a_image, std::string_view b_image, const std::string& name) {
  auto ab = Alphabet::of("ab");
  Morphism m;
  m.alphabet = ab;
  m.images.emplace(0, Word::parse(ab, a_image));
  m.images.emplace(1, Word::parse(ab, b_image));
  m.seed = 0;
  (void)name;
  return WordSource::morphic(std::move(m));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "a>ab,b>ba" -> ordered (lhs, rhs) pairs.
std::vector<std::pair<std::string, std::string>> parse_rules(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> rules;
  for (const auto& rule : split(text, ',')) {
    auto gt = rule.find('>');
    if (gt == std::string::npos) throw std::invalid_argument("morphism rule '" + rule + "' lacks '>'");
    std::string lhs = rule.substr(0, gt);
    if (utf8_glyphs(lhs).size() != 1) throw std::invalid_argument("morphism rule '" + rule + "' must map one symbol");
    rules.emplace_back(std::move(lhs), rule.substr(gt + 1));
  }
  return rules;
}

}  // namespace

WordSource WordSource::thue_morse() { return binary_morphism("ab", "ba", "thue-morse"); }
WordSource WordSource::fibonacci() { return binary_morphism("ab", "a", "fibonacci"); }

WordSource WordSource::parse(std::string_view text) {
  if (text == "thue-morse") return thue_morse();
  if (text == "fibonacci") return fibonacci();
  if (text.substr(0, 3) == "up:") {
    auto parts = split(text.substr(3), ',');
    if (parts.size() != 2) throw std::invalid_argument("expected up:U,V");
    std::string letters;
    for (const auto& p : parts) {
      if (p != "()") letters += p;
    }
    if (letters.empty()) throw std::invalid_argument("up: period must be nonempty");
    auto alphabet = Alphabet::sorted_from(letters);
    return periodic(canonicalize(Word::parse(alphabet, parts[0]), Word::parse(alphabet, parts[1])));
  }

  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<std::pair<std::string, std::string>> rules;
  std::string seed;
  std::string coding = "identity";
  while (in >> token) {
    if (token.rfind("seed=", 0) == 0) {
      seed = token.substr(5);
    } else if (token.rfind("coding=", 0) == 0) {
      coding = token.substr(7);
    } else if (rules.empty()) {
      rules = parse_rules(token);
    } else {
      throw std::invalid_argument("unexpected token '" + token + "' in morphism description");
    }
  }
  if (rules.empty()) throw std::invalid_argument("unknown word source '" + std::string(text) + "'");

  std::string letters;
  for (const auto& [lhs, rhs] : rules) letters += lhs;
  auto alphabet = Alphabet::sorted_from(letters);
  if (alphabet->size() != rules.size()) throw std::invalid_argument("morphism maps a symbol twice");
  Morphism m;
  m.alphabet = alphabet;
  for (const auto& [lhs, rhs] : rules) m.images.emplace(*alphabet->find(lhs), Word::parse(alphabet, rhs));
  if (seed.empty()) seed = rules.front().first;
  auto seed_symbol = alphabet->find(seed);
  if (!seed_symbol) throw std::invalid_argument("seed '" + seed + "' is not in the alphabet");
  m.seed = *seed_symbol;
  if (coding != "identity") {
    auto coding_rules = parse_rules(coding);
    std::string targets;
    for (const auto& [lhs, rhs] : coding_rules) targets += rhs;
    m.output = Alphabet::sorted_from(targets);
    for (const auto& [lhs, rhs] : coding_rules) {
      auto from = alphabet->find(lhs);
      auto to = m.output->find(rhs);
      if (!from || !to || utf8_glyphs(rhs).size() != 1) throw std::invalid_argument("bad coding rule " + lhs + ">" + rhs);
      m.coding[*from] = *to;
    }
  }
  return morphic(std::move(m));
}

Word WordSource::prefix(std::size_t n) const {
  if (const auto* up = std::get_if<UPWord>(&kind_)) {
    std::vector<Symbol> out;
    out.reserve(n);
    const auto u = up->preperiod().symbols();
    const auto v = up->period().symbols();
    for (std::size_t i = 0; i < n; ++i) out.push_back(i < u.size() ? u[i] : v[(i - u.size()) % v.size()]);
    return Word(alphabet_, std::move(out));
  }
  const auto& m = std::get<Morphism>(kind_);
  std::vector<Symbol> raw;
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto& memo = memo_->raw;
    if (memo.empty()) memo.push_back(m.seed);
    while (memo.size() < n) {
      std::vector<Symbol> next;
      for (Symbol s : memo) {
        auto img = m.images.at(s).symbols();
        next.insert(next.end(), img.begin(), img.end());
      }
      memo = std::move(next);
    }
    raw.assign(memo.begin(), memo.begin() + static_cast<std::ptrdiff_t>(n));
  }
  if (!m.coding.empty()) {
    for (Symbol& s : raw) s = m.coding.at(s);
  }
  return Word(alphabet_, std::move(raw));
}

FactorSet factor_set(const WordSource& src, std::size_t n, std::size_t morphic_prefix) {
  if (const UPWord* up = src.periodic_word()) {
    // Every start position past the preperiod repeats modulo |v|.
    const std::size_t window = up->preperiod().size() + up->period().size() + (n > 0 ? n - 1 : 0);
    return {factors_of_length(src.prefix(window), n), false};
  }
  return {factors_of_length(src.prefix(std::max(morphic_prefix, n)), n), true};
}

Count complexity(const WordSource& src, std::size_t n, std::size_t morphic_prefix) {
  auto fs = factor_set(src, n, morphic_prefix);
  return {fs.factors.size(), fs.approximate};
}

Count kcomplexity(const WordSource& src, std::size_t k, std::size_t n, std::size_t morphic_prefix) {
  auto fs = factor_set(src, n, morphic_prefix);
  std::vector<Word> words(fs.factors.begin(), fs.factors.end());
  return {partition(words, k).size(), fs.approximate};
}

ComplexityProfile complexity_profile(const WordSource& src, std::size_t n_max, const std::vector<std::size_t>& ks,
                                     std::size_t morphic_prefix) {
  ComplexityProfile profile{ks, {}, false};
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto fs = factor_set(src, n, morphic_prefix);
    profile.approximate = profile.approximate || fs.approximate;
    std::vector<Word> words(fs.factors.begin(), fs.factors.end());
    ComplexityRow row{n, words.size(), {}};
    for (std::size_t k : ks) row.classes.push_back(partition(words, k).size());
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

std::optional<EquivalentPair> find_equivalent_pair(const WordSource& src, std::size_t k, std::size_t n_max,
                                                   std::size_t morphic_prefix) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto fs = factor_set(src, n, morphic_prefix);
    std::unordered_map<KSignature, std::vector<const Word*>> buckets;
    for (const Word& f : fs.factors) buckets[signature(f, k)].push_back(&f);
    std::optional<EquivalentPair> best;
    for (const auto& [sig, members] : buckets) {
      if (members.size() < 2) continue;
      // Members were inserted in set order, so the first two are the least.
      EquivalentPair candidate{*members[0], *members[1], n};
      if (!best || std::tie(candidate.first, candidate.second) < std::tie(best->first, best->second)) {
        best = std::move(candidate);
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace ssfkit
