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

// Alphabets and finite words.
//
// A Word stores symbol ranks (indices into its Alphabet), so comparing two
// words symbol by symbol compares them in the alphabet's order. Words keep a
// shared handle on their alphabet; mixing words over different alphabets is
// an error (AlphabetMismatch).

#ifndef SSFKIT_WORD_HPP
#define SSFKIT_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ssfkit {

using Symbol = std::uint32_t;

class AlphabetMismatch : public std::invalid_argument {
 public:
  AlphabetMismatch() : std::invalid_argument("words are over different alphabets") {}
};

// Splits UTF-8 text into code points, one string per code point.
std::vector<std::string> utf8_glyphs(std::string_view text);

// Finite, totally ordered set of symbols. Each symbol is a single UTF-8 code
// point; the order is the construction order.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> glyphs);

  // One symbol per code point of `letters`, in the order given.
  static std::shared_ptr<const Alphabet> of(std::string_view letters);
  // Distinct code points of `text` sorted by code point value.
  static std::shared_ptr<const Alphabet> sorted_from(std::string_view text);

  std::size_t size() const { return glyphs_.size(); }
  const std::string& glyph(Symbol s) const { return glyphs_.at(s); }
  const std::vector<std::string>& glyphs() const { return glyphs_; }
  std::optional<Symbol> find(std::string_view glyph) const;
  bool contains(std::string_view glyph) const { return find(glyph).has_value(); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.glyphs_ == b.glyphs_; }

 private:
  std::vector<std::string> glyphs_;
  std::unordered_map<std::string, Symbol> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

class Word {
 public:
  explicit Word(AlphabetPtr alphabet, std::vector<Symbol> symbols = {});

  // Parses `text` as a sequence of glyphs of `alphabet`. "()" denotes the
  // empty word. Throws std::invalid_argument on a glyph outside the alphabet.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }

  Word substr(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const { return substr(size() - len, len); }
  Word pow(std::size_t n) const;
  bool starts_with(const Word& p) const;
  bool ends_with(const Word& s) const;

  Word& operator+=(const Word& other);
  friend Word operator+(Word a, const Word& b) { return a += b; }

  // Concatenated glyphs; the empty word renders as "".
  std::string str() const;
  // Like str(), but the empty word renders as "()" so it survives a parse.
  std::string display() const;

  friend bool operator==(const Word& a, const Word& b);
  // Shortlex: shorter words first, equal lengths compared lexicographically.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Symbol> symbols_;
};

// Plain lexicographic order (a proper prefix is smaller).
bool lex_less(const Word& a, const Word& b);

// All words of length exactly n, in lexicographic order.
std::vector<Word> all_words(const AlphabetPtr& alphabet, std::size_t n);
// All words of length at most n, in shortlex order (starts with the empty word).
std::vector<Word> all_words_up_to(const AlphabetPtr& alphabet, std::size_t n);

}  // namespace ssfkit

template <>
struct std::hash<ssfkit::Word> {
  std::size_t operator()(const ssfkit::Word& w) const noexcept;
};

#endif  // SSFKIT_WORD_HPP
