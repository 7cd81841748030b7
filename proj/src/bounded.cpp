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

#include "ssfkit/bounded.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "ssfkit/combinatorics.hpp"

namespace ssfkit {

std::size_t BoundedTerm::length_with_exponent(std::size_t e) const {
  std::size_t len = head.size();
  for (const auto& b : blocks) len += e * b.star.size() + b.tail.size();
  return len;
}

BoundedExpr::BoundedExpr(AlphabetPtr alphabet, std::vector<BoundedTerm> terms)
    : alphabet_(std::move(alphabet)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    for (const auto& b : t.blocks) {
      if (b.star.empty()) throw std::invalid_argument("bounded expression: starred word must be nonempty");
    }
  }
}

bool BoundedExpr::has_stars() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const BoundedTerm& t) { return !t.blocks.empty(); });
}

std::string BoundedExpr::str() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += "; ";
    const auto& t = terms_[i];
    std::vector<std::string> items;
    if (!t.head.empty()) items.push_back(t.head.str());
    for (const auto& b : t.blocks) {
      items.push_back(b.star.size() == 1 ? b.star.str() + "*" : "(" + b.star.str() + ")*");
      if (!b.tail.empty()) items.push_back(b.tail.str());
    }
    if (items.empty()) items.emplace_back("()");
    for (std::size_t j = 0; j < items.size(); ++j) out += (j > 0 ? " " : "") + items[j];
  }
  return out;
}

Regex BoundedExpr::to_regex() const {
  auto word_node = [](const Word& w) {
    std::vector<RegexPtr> letters;
    for (Symbol s : w.symbols()) letters.push_back(RegexNode::letter(s));
    return RegexNode::concat(std::move(letters));
  };
  std::vector<RegexPtr> alternatives;
  for (const auto& t : terms_) {
    std::vector<RegexPtr> parts{word_node(t.head)};
    for (const auto& b : t.blocks) {
      parts.push_back(RegexNode::star(word_node(b.star)));
      parts.push_back(word_node(b.tail));
    }
    alternatives.push_back(RegexNode::concat(std::move(parts)));
  }
  if (alternatives.empty()) return Regex(alphabet_, RegexNode::empty_set());
  return Regex(alphabet_, RegexNode::alt(std::move(alternatives)));
}

namespace {

bool is_bounded_metachar(const std::string& g) {
  return g == "(" || g == ")" || g == "*" || g == ";" || g == "|" || g == "#";
}

std::vector<std::string> significant_glyphs(std::string_view text) {
  std::vector<std::string> out;
  for (auto& g : utf8_glyphs(text)) {
    if (g.size() == 1 && std::isspace(static_cast<unsigned char>(g[0]))) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

BoundedExpr parse_bounded(std::string_view text, AlphabetPtr alphabet) {
  const auto glyphs = significant_glyphs(text);
  std::vector<BoundedTerm> terms;
  BoundedTerm term{Word(alphabet), {}};
  auto literal = [&](const Word& w) {
    if (term.blocks.empty()) {
      term.head += w;
    } else {
      term.blocks.back().tail += w;
    }
  };
  auto symbol = [&](const std::string& g) {
    auto s = alphabet->find(g);
    if (!s) throw std::invalid_argument("bounded expression: symbol '" + g + "' is not in the alphabet");
    return *s;
  };

  std::size_t i = 0;
  while (i < glyphs.size()) {
    const std::string& g = glyphs[i];
    if (g == ";") {
      terms.push_back(std::move(term));
      term = BoundedTerm{Word(alphabet), {}};
      ++i;
      continue;
    }
    if (g == ")" || g == "*" || g == "|" || g == "#") {
      throw std::invalid_argument("bounded expression: unexpected '" + g + "'");
    }
    std::vector<Symbol> word;
    if (g == "(") {
      ++i;
      while (i < glyphs.size() && glyphs[i] != ")") {
        if (is_bounded_metachar(glyphs[i])) {
          throw std::invalid_argument("bounded expression: unexpected '" + glyphs[i] + "' inside parentheses");
        }
        word.push_back(symbol(glyphs[i++]));
      }
      if (i == glyphs.size()) throw std::invalid_argument("bounded expression: unbalanced '('");
    } else {
      word.push_back(symbol(g));
    }
    ++i;
    bool starred = false;
    while (i < glyphs.size() && glyphs[i] == "*") {
      starred = true;
      ++i;
    }
    Word w(alphabet, std::move(word));
    if (starred) {
      if (w.empty()) throw std::invalid_argument("bounded expression: starred word must be nonempty");
      term.blocks.push_back({std::move(w), Word(alphabet)});
    } else {
      literal(w);
    }
  }
  terms.push_back(std::move(term));
  return BoundedExpr(std::move(alphabet), std::move(terms));
}

BoundedExpr parse_bounded(std::string_view text) {
  std::string letters;
  for (const auto& g : significant_glyphs(text)) {
    if (!is_bounded_metachar(g)) letters += g;
  }
  if (letters.empty()) letters = "a";
  return parse_bounded(text, Alphabet::sorted_from(letters));
}

NkpParameters nkp_parameters(const BoundedExpr& expr) {
  NkpParameters params;
  if (!expr.has_stars()) {
    std::size_t longest = 0;
    for (const auto& t : expr.terms()) longest = std::max(longest, t.length_with_exponent(0));
    params.n = params.k = longest + 1;
    return params;
  }
  std::size_t once = 0;
  for (const auto& t : expr.terms()) {
    once = std::max(once, t.length_with_exponent(1));
    for (const auto& b : t.blocks) params.roots.insert(lyndon_root(b.star));
  }
  params.n = 2 * once;
  for (const auto& t : expr.terms()) params.k = std::max(params.k, t.length_with_exponent(params.n + 2));
  return params;
}

namespace {

struct Derivation {
  std::size_t term = 0;
  std::vector<std::size_t> exponents;
  Word word;
};

// Calls `visit` for every choice of star exponents with total length <= max_len.
void for_each_derivation(const BoundedExpr& expr, std::size_t max_len,
                         const std::function<void(const Derivation&)>& visit) {
  for (std::size_t ti = 0; ti < expr.terms().size(); ++ti) {
    const auto& term = expr.terms()[ti];
    const std::size_t base = term.length_with_exponent(0);
    if (base > max_len) continue;
    Derivation d{ti, std::vector<std::size_t>(term.blocks.size(), 0), Word(expr.alphabet())};
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t block, std::size_t budget) {
      if (block == term.blocks.size()) {
        Word w = term.head;
        for (std::size_t j = 0; j < term.blocks.size(); ++j) {
          w += term.blocks[j].star.pow(d.exponents[j]);
          w += term.blocks[j].tail;
        }
        d.word = std::move(w);
        visit(d);
        return;
      }
      const std::size_t step = term.blocks[block].star.size();
      for (std::size_t e = 0; e * step <= budget; ++e) {
        d.exponents[block] = e;
        rec(block + 1, budget - e * step);
      }
    };
    rec(0, max_len - base);
  }
}

// [start, end) of starred block j's run inside the derived word.
std::pair<std::size_t, std::size_t> block_span(const BoundedTerm& term, const std::vector<std::size_t>& exponents,
                                               std::size_t j) {
  std::size_t pos = term.head.size();
  for (std::size_t b = 0; b < j; ++b) pos += exponents[b] * term.blocks[b].star.size() + term.blocks[b].tail.size();
  return {pos, pos + exponents[j] * term.blocks[j].star.size()};
}

}  // namespace

NkpReport check_nkp_conditions(const BoundedExpr& expr, const NkpParameters& params, std::size_t len_cap,
                               std::size_t max_examples) {
  NkpReport report;
  const std::vector<Word> roots(params.roots.begin(), params.roots.end());

  // Condition 1 is checked exactly: every length-n factor of some power of p
  // already occurs in p^(ceil(n/|p|) + 1).
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      auto fa = factors_of_length(roots[a].pow(params.n / roots[a].size() + 2), params.n);
      auto fb = factors_of_length(roots[b].pow(params.n / roots[b].size() + 2), params.n);
      const bool shared = std::any_of(fa.begin(), fa.end(), [&fb](const Word& f) { return fb.count(f) > 0; });
      if (shared) {
        report.condition1 = false;
        report.overlapping_roots.emplace_back(roots[a], roots[b]);
      }
    }
  }

  std::vector<Word> run_powers;
  for (const Word& p : roots) run_powers.push_back(p.pow(params.n + 1));

  for_each_derivation(expr, len_cap, [&](const Derivation& d) {
    ++report.words_checked;
    const Word& u = d.word;
    const auto& term = expr.terms()[d.term];

    if (params.n > 0) {
      for (const Word& p : roots) {
        const auto runs = maximal_power_occurrences(u, p, params.n);
        if (runs.size() < 2) continue;
        report.condition2 = false;
        if (report.multi_runs.size() >= max_examples) continue;
        // Attribute each run to the starred block it overlaps by >= |p v_j|.
        std::vector<std::size_t> carriers;
        for (const auto& run : runs) {
          for (std::size_t j = 0; j < term.blocks.size(); ++j) {
            if (lyndon_root(term.blocks[j].star) != p) continue;
            auto [lo, hi] = block_span(term, d.exponents, j);
            const std::size_t a = std::max(lo, run.start());
            const std::size_t b = std::min(hi, run.end());
            if (a < b && b - a >= p.size() + term.blocks[j].star.size()) {
              carriers.push_back(j);
              break;
            }
          }
        }
        NkpReport::MultiRun entry{u, p, d.term, 0, 0};
        if (carriers.size() >= 2) {
          entry.first_block = carriers[0];
          entry.second_block = carriers[1];
        }
        report.multi_runs.push_back(std::move(entry));
      }
    }

    if (u.size() >= params.k) {
      std::vector<std::vector<std::size_t>> hits;
      for (const Word& rp : run_powers) hits.push_back(occurrence_positions(u, rp));
      for (std::size_t s = 0; s + params.k <= u.size(); ++s) {
        bool covered = false;
        for (std::size_t r = 0; r < run_powers.size() && !covered; ++r) {
          auto it = std::lower_bound(hits[r].begin(), hits[r].end(), s);
          covered = it != hits[r].end() && *it + run_powers[r].size() <= s + params.k;
        }
        if (!covered) {
          report.condition3 = false;
          if (report.bare_factors.size() < max_examples) report.bare_factors.push_back({u, u.substr(s, params.k)});
          break;
        }
      }
    }
  });
  return report;
}

FiniteLanguage bexpr_enumerate(const BoundedExpr& expr, std::size_t max_len) {
  std::vector<Word> words;
  for_each_derivation(expr, max_len, [&words](const Derivation& d) { words.push_back(d.word); });
  return FiniteLanguage(expr.alphabet(), std::move(words));
}

}  // namespace ssfkit
