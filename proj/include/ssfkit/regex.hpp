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

// Regular expression syntax:
//
//   symbols     any alphabet glyph other than | * ( ) #
//   e | f       union
//   e f         concatenation (juxtaposition)
//   e*          Kleene star; e** is the same as e*
//   ( e )       grouping
//   ()          the empty word
//   #           the empty language
//
// Whitespace is ignored.

#ifndef SSFKIT_REGEX_HPP
#define SSFKIT_REGEX_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ssfkit/word.hpp"

namespace ssfkit {

class RegexParseError : public std::invalid_argument {
 public:
  RegexParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct RegexNode {
  enum class Kind { kEmptySet, kEpsilon, kSymbol, kUnion, kConcat, kStar };

  Kind kind = Kind::kEmptySet;
  Symbol symbol = 0;
  std::vector<std::shared_ptr<const RegexNode>> children;

  static std::shared_ptr<const RegexNode> empty_set();
  static std::shared_ptr<const RegexNode> epsilon();
  static std::shared_ptr<const RegexNode> letter(Symbol s);
  static std::shared_ptr<const RegexNode> alt(std::vector<std::shared_ptr<const RegexNode>> parts);
  static std::shared_ptr<const RegexNode> concat(std::vector<std::shared_ptr<const RegexNode>> parts);
  static std::shared_ptr<const RegexNode> star(std::shared_ptr<const RegexNode> body);
};

using RegexPtr = std::shared_ptr<const RegexNode>;

class Regex {
 public:
  Regex(AlphabetPtr alphabet, RegexPtr root) : alphabet_(std::move(alphabet)), root_(std::move(root)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const RegexNode& root() const { return *root_; }
  const RegexPtr& root_ptr() const { return root_; }

  // Fully parenthesized-where-needed text that parses back to the same tree.
  std::string str() const;

 private:
  AlphabetPtr alphabet_;
  RegexPtr root_;
};

bool is_regex_metachar(std::string_view glyph);

Regex parse_regex(std::string_view text, AlphabetPtr alphabet);
// Alphabet: the symbols occurring in `text`, sorted by code point.
Regex parse_regex(std::string_view text);

}  // namespace ssfkit

#endif  // SSFKIT_REGEX_HPP
