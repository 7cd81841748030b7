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

#include "ssfkit/regex.hpp"

#include <cctype>

namespace ssfkit {

RegexPtr RegexNode::empty_set() { return std::make_shared<const RegexNode>(RegexNode{Kind::kEmptySet, 0, {}}); }
RegexPtr RegexNode::epsilon() { return std::make_shared<const RegexNode>(RegexNode{Kind::kEpsilon, 0, {}}); }
RegexPtr RegexNode::letter(Symbol s) { return std::make_shared<const RegexNode>(RegexNode{Kind::kSymbol, s, {}}); }

RegexPtr RegexNode::alt(std::vector<RegexPtr> parts) {
  if (parts.size() == 1) return parts.front();
  return std::make_shared<const RegexNode>(RegexNode{Kind::kUnion, 0, std::move(parts)});
}

RegexPtr RegexNode::concat(std::vector<RegexPtr> parts) {
  if (parts.empty()) return epsilon();
  if (parts.size() == 1) return parts.front();
  return std::make_shared<const RegexNode>(RegexNode{Kind::kConcat, 0, std::move(parts)});
}

RegexPtr RegexNode::star(RegexPtr body) {
  if (body->kind == Kind::kStar) return body;
  return std::make_shared<const RegexNode>(RegexNode{Kind::kStar, 0, {std::move(body)}});
}

bool is_regex_metachar(std::string_view glyph) {
  return glyph == "|" || glyph == "*" || glyph == "(" || glyph == ")" || glyph == "#";
}

namespace {

struct Token {
  std::string glyph;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t offset = 0;
  for (auto& g : utf8_glyphs(text)) {
    const std::size_t len = g.size();
    if (!(len == 1 && std::isspace(static_cast<unsigned char>(g[0])))) out.push_back({std::move(g), offset});
    offset += len;
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, AlphabetPtr alphabet, std::size_t end_offset)
      : tokens_(std::move(tokens)), alphabet_(std::move(alphabet)), end_offset_(end_offset) {}

  RegexPtr parse() {
    if (tokens_.empty()) throw RegexParseError("empty expression", 0);
    RegexPtr r = parse_union();
    if (pos_ < tokens_.size()) {
      if (peek() == ")") throw RegexParseError("unbalanced ')'", offset());
      throw RegexParseError("unexpected '" + peek() + "'", offset());
    }
    return r;
  }

 private:
  const std::string& peek() const { return tokens_[pos_].glyph; }
  bool at_end() const { return pos_ >= tokens_.size(); }
  std::size_t offset() const { return at_end() ? end_offset_ : tokens_[pos_].offset; }

  RegexPtr parse_union() {
    std::vector<RegexPtr> parts{parse_concat()};
    while (!at_end() && peek() == "|") {
      ++pos_;
      parts.push_back(parse_concat());
    }
    return RegexNode::alt(std::move(parts));
  }

  RegexPtr parse_concat() {
    std::vector<RegexPtr> parts;
    while (!at_end() && peek() != "|" && peek() != ")") parts.push_back(parse_repeat());
    if (parts.empty()) throw RegexParseError("missing operand", offset());
    return RegexNode::concat(std::move(parts));
  }

  RegexPtr parse_repeat() {
    RegexPtr atom = parse_atom();
    while (!at_end() && peek() == "*") {
      ++pos_;
      atom = RegexNode::star(std::move(atom));
    }
    return atom;
  }

  RegexPtr parse_atom() {
    const std::string& g = peek();
    const std::size_t at = offset();
    if (g == "*") throw RegexParseError("stray '*'", at);
    if (g == "#") {
      ++pos_;
      return RegexNode::empty_set();
    }
    if (g == "(") {
      ++pos_;
      if (!at_end() && peek() == ")") {
        ++pos_;
        return RegexNode::epsilon();
      }
      RegexPtr inner = parse_union();
      if (at_end() || peek() != ")") throw RegexParseError("unbalanced '('", at);
      ++pos_;
      return inner;
    }
    auto s = alphabet_->find(g);
    if (!s) throw RegexParseError("symbol '" + g + "' is not in the alphabet", at);
    ++pos_;
    return RegexNode::letter(*s);
  }

  std::vector<Token> tokens_;
  AlphabetPtr alphabet_;
  std::size_t end_offset_;
  std::size_t pos_ = 0;
};

// Precedence: union 0, concat 1, star 2.
void render(const RegexNode& n, const Alphabet& a, int context, std::string& out) {
  switch (n.kind) {
    case RegexNode::Kind::kEmptySet:
      out += '#';
      return;
    case RegexNode::Kind::kEpsilon:
      out += "()";
      return;
    case RegexNode::Kind::kSymbol:
      out += a.glyph(n.symbol);
      return;
    case RegexNode::Kind::kUnion:
    case RegexNode::Kind::kConcat: {
      const bool is_union = n.kind == RegexNode::Kind::kUnion;
      const int mine = is_union ? 0 : 1;
      if (context > mine) out += '(';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0 && is_union) out += '|';
        render(*n.children[i], a, mine + 1, out);
      }
      if (context > mine) out += ')';
      return;
    }
    case RegexNode::Kind::kStar:
      render(*n.children[0], a, 3, out);
      out += '*';
      return;
  }
}

}  // namespace

std::string Regex::str() const {
  std::string out;
  render(*root_, *alphabet_, 0, out);
  return out;
}

Regex parse_regex(std::string_view text, AlphabetPtr alphabet) {
  return Regex(alphabet, Parser(tokenize(text), alphabet, text.size()).parse());
}

Regex parse_regex(std::string_view text) {
  std::string letters;
  for (const auto& t : tokenize(text)) {
    if (!is_regex_metachar(t.glyph)) letters += t.glyph;
  }
  if (letters.empty()) letters = "a";
  return parse_regex(text, Alphabet::sorted_from(letters));
}

}  // namespace ssfkit
