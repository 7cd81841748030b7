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

#include "ssfkit/word.hpp"

#include <algorithm>
#include <set>

namespace ssfkit {

std::vector<std::string> utf8_glyphs(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    }
    len = std::min(len, text.size() - i);
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.empty()) throw std::invalid_argument("alphabet must have at least one symbol");
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    if (glyphs_[i].empty()) throw std::invalid_argument("empty alphabet symbol");
    if (!index_.emplace(glyphs_[i], static_cast<Symbol>(i)).second) {
      throw std::invalid_argument("duplicate alphabet symbol '" + glyphs_[i] + "'");
    }
  }
}

std::shared_ptr<const Alphabet> Alphabet::of(std::string_view letters) {
  return std::make_shared<const Alphabet>(utf8_glyphs(letters));
}

std::shared_ptr<const Alphabet> Alphabet::sorted_from(std::string_view text) {
  // Lexicographic order of UTF-8 bytes coincides with code point order.
  auto glyphs = utf8_glyphs(text);
  std::set<std::string> distinct(glyphs.begin(), glyphs.end());
  return std::make_shared<const Alphabet>(std::vector<std::string>(distinct.begin(), distinct.end()));
}

std::optional<Symbol> Alphabet::find(std::string_view glyph) const {
  auto it = index_.find(std::string(glyph));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

Word::Word(AlphabetPtr alphabet, std::vector<Symbol> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
  for (Symbol s : symbols_) {
    if (s >= alphabet_->size()) throw std::invalid_argument("symbol out of alphabet range");
  }
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Symbol> symbols;
  if (text != "()") {
    for (const auto& g : utf8_glyphs(text)) {
      auto s = alphabet->find(g);
      if (!s) throw std::invalid_argument("symbol '" + g + "' is not in the alphabet");
      symbols.push_back(*s);
    }
  }
  return Word(std::move(alphabet), std::move(symbols));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) throw std::out_of_range("Word::substr");
  return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::pow(std::size_t n) const {
  std::vector<Symbol> out;
  out.reserve(size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), symbols_.begin(), symbols_.end());
  return Word(alphabet_, std::move(out));
}

bool Word::starts_with(const Word& p) const {
  if (!same_alphabet(alphabet_, p.alphabet_)) throw AlphabetMismatch();
  return p.size() <= size() && std::equal(p.symbols_.begin(), p.symbols_.end(), symbols_.begin());
}

bool Word::ends_with(const Word& s) const {
  if (!same_alphabet(alphabet_, s.alphabet_)) throw AlphabetMismatch();
  return s.size() <= size() && std::equal(s.symbols_.rbegin(), s.symbols_.rend(), symbols_.rbegin());
}

Word& Word::operator+=(const Word& other) {
  if (!same_alphabet(alphabet_, other.alphabet_)) throw AlphabetMismatch();
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

std::string Word::str() const {
  std::string out;
  for (Symbol s : symbols_) out += alphabet_->glyph(s);
  return out;
}

std::string Word::display() const { return empty() ? std::string("()") : str(); }

bool operator==(const Word& a, const Word& b) {
  return a.symbols_ == b.symbols_ && same_alphabet(a.alphabet_, b.alphabet_);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.symbols_ <=> b.symbols_;
}

bool lex_less(const Word& a, const Word& b) {
  auto sa = a.symbols();
  auto sb = b.symbols();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

std::vector<Word> all_words(const AlphabetPtr& alphabet, std::size_t n) {
  std::vector<Word> out;
  std::vector<Symbol> cur(n, 0);
  const auto sigma = static_cast<Symbol>(alphabet->size());
  while (true) {
    out.emplace_back(alphabet, cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] + 1 == sigma) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

std::vector<Word> all_words_up_to(const AlphabetPtr& alphabet, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto layer = all_words(alphabet, len);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace ssfkit

std::size_t std::hash<ssfkit::Word>::operator()(const ssfkit::Word& w) const noexcept {
  // FNV-1a over the symbol ranks.
  std::uint64_t h = 1469598103934665603ULL;
  for (ssfkit::Symbol s : w.symbols()) {
    h ^= s + 0x9e3779b9U;
    h *= 1099511628211ULL;
  }
  h ^= w.size();
  return static_cast<std::size_t>(h);
}
