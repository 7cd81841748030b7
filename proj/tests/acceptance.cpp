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

// Acceptance driver: one PASS/FAIL line per criterion, each with a pinned
// wall-clock budget. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <bit>
#include <functional>
#include <iostream>
#include <string>
#include <unordered_set>

#include "ssfkit/bounded.hpp"
#include "ssfkit/combinatorics.hpp"
#include "ssfkit/dfa.hpp"
#include "ssfkit/infinite.hpp"
#include "ssfkit/kabelian.hpp"
#include "ssfkit/regex.hpp"
#include "ssfkit/regular.hpp"
#include "ssfkit/ssf.hpp"
#include "support.hpp"

using namespace ssfkit;
using namespace ssfkit::testing;

namespace {

// Budgets in seconds, indexed by criterion number.
constexpr double kBudget[] = {0, 1, 1, 1, 1, 1, 10, 30, 30, 60, 60, 120};

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Dfa dfa_of(std::string_view text) { return compile(parse_regex(text, ab())); }

Dfa::State walk(const Dfa& dfa, Dfa::State q, const Word& w) {
  for (Symbol s : w.symbols()) q = dfa.next(q, s);
  return q;
}

bool in_pstar(const Word& w, const Word& p) { return w.size() % p.size() == 0 && p.pow(w.size() / p.size()) == w; }

Outcome square_enumeration() {
  Outcome o;
  auto lang = L({"aa", "ab", "ba", "bb"});
  auto all = enumerate_inclusion_minimal(lang, default_universe(lang));
  std::set<SsfCandidate> expected{Ws({"a", "ab"}),       Ws({"a", "ba"}),        Ws({"b", "ab"}),
                                  Ws({"b", "ba"}),       Ws({"aa", "ab", "ba"}), Ws({"aa", "ab", "bb"}),
                                  Ws({"aa", "ba", "bb"}), Ws({"ab", "ba", "bb"})};
  o.require(all.size() == 8, "expected 8 sets, got " + std::to_string(all.size()));
  o.require(std::set<SsfCandidate>(all.begin(), all.end()) == expected, "set family differs");
  return o;
}

Outcome unary_slice() {
  Outcome o;
  auto slice = L({"", "a", "aa", "aaa", "aaaa", "aaaaa"});
  auto all = enumerate_inclusion_minimal(slice, Ws({"", "a", "aa", "aaa", "aaaa", "aaaaa"}));
  o.require(std::set<SsfCandidate>(all.begin(), all.end()) == std::set<SsfCandidate>{Ws({""}), Ws({"a"})},
            "family is not {{()},{a}}");
  o.require(all.size() == 2, "duplicates in family");
  return o;
}

Outcome size_minimal_example() {
  Outcome o;
  auto letters = Alphabet::of("abcdef");
  auto lang = L(letters, {"ac", "ad", "be", "bf"});
  auto best = size_minimal(lang);
  o.require(best.size() == 3, "size " + std::to_string(best.size()));
  o.require(is_ssf(best, lang).separating(), "result does not separate");
  return o;
}

Outcome pinned_pairs() {
  Outcome o;
  auto latin = Alphabet::of("abcdefghijklmnopqrstuvwxyz");
  auto w = [&](std::string_view s) { return Word::parse(latin, s); };
  o.require(equivalent(W("aabab"), W("abaab"), 2), "aabab/abaab");
  o.require(!equivalent(W("aba"), W("bab"), 2), "aba/bab");
  for (std::size_t k = 1; k <= 6; ++k) {
    Word u = W("a").pow(k) + W("b") + W("a").pow(k - 1);
    Word v = W("a").pow(k - 1) + W("b") + W("a").pow(k);
    o.require(equivalent(u, v, k), "a^k b a^(k-1) at k=" + std::to_string(k));
    o.require(!equivalent(u, v, k + 1), "a^k b a^(k-1) at k+1=" + std::to_string(k + 1));
  }
  o.require(equivalent(w("indenter"), w("intender"), 2), "indenter/intender");
  o.require(equivalent(w("reregister"), w("registerer"), 3), "reregister/registerer at 3");
  o.require(!equivalent(w("reregister"), w("registerer"), 4), "reregister/registerer at 4");
  return o;
}

Outcome regular_decisions() {
  Outcome o;
  auto k_lang = dfa_of("a*(abab)*ba(ba)*");
  auto d1 = decide_finite_ssf(k_lang);
  o.require(!d1.has_finite_ssf && d1.witness && verify_witness(k_lang, *d1.witness, 3), "a*(abab)*ba(ba)*");
  o.require(decide_finite_ssf(dfa_of("a*(abab)*aba(ba)*")).has_finite_ssf, "a*(abab)*aba(ba)*");
  auto d3 = decide_finite_ssf(dfa_of("a*ba*"));
  o.require(!d3.has_finite_ssf, "a*ba*");
  return o;
}

Outcome half_main_family() {
  Outcome o;
  auto gen = rng(1006);
  int made = 0;
  while (made < 200 && o.ok) {
    Word x = random_word(gen, ab(), 0, 3);
    Word w = random_word(gen, ab(), 1, 3);
    Word y = random_word(gen, ab(), 0, 3);
    Word z = random_word(gen, ab(), 0, 3);
    if (commute(w, y)) continue;
    const std::size_t k = 1 + made % 5;
    auto [u, v] = half_main_pair(x, w, y, z, k);
    // Membership in x w* y w* z via its automaton.
    auto member = compile(parse_regex("(" + x.str() + ")(" + w.str() + ")*(" + y.str() + ")(" + w.str() + ")*(" +
                                          z.str() + ")",
                                      ab()));
    const std::string tag = " for x=" + x.str() + " w=" + w.str() + " y=" + y.str() + " z=" + z.str();
    o.require(u != v, "equal pair" + tag);
    o.require(naive_equivalent(u, v, k), "not equivalent" + tag);
    o.require(member.accepts(u) && member.accepts(v), "not members" + tag);
    ++made;
  }
  return o;
}

Outcome periodic_forward() {
  Outcome o;
  auto gen = rng(1007);
  int made = 0;
  while (made < 50 && o.ok) {
    Word u = random_word(gen, ab(), 0, 5);
    Word v = random_word(gen, ab(), 1, 6);
    if (u.size() + v.size() > 6 || !is_canonical(u, v)) continue;
    auto up = UPWord::from_canonical(u, v);
    auto src = WordSource::periodic(up);
    const std::size_t k = separating_k(up);
    for (std::size_t n = 1; n <= 3 * (u.size() + v.size()); ++n) {
      std::unordered_set<KSignature> seen;
      for (const Word& f : factor_set(src, n).factors) {
        o.require(seen.insert(signature(f, k)).second, "collision in up:" + u.str() + "," + v.str());
      }
    }
    ++made;
  }
  return o;
}

Outcome aperiodic_converse() {
  Outcome o;
  for (const auto& src : {WordSource::thue_morse(), WordSource::fibonacci()}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      auto p = find_equivalent_pair(src, k, 200);
      o.require(p && p->first != p->second && naive_equivalent(p->first, p->second, k),
                src.description() + " at k=" + std::to_string(k));
    }
    for (std::size_t n = 1; n <= 30; ++n) {
      o.require(complexity(src, n).value >= n + 1, src.description() + " complexity at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome regex_cross_validation() {
  Outcome o;
  auto gen = rng(1009);
  for (int t = 0; t < 200 && o.ok; ++t) {
    const auto text = random_regex(gen, 3);
    auto dfa = dfa_of(text);
    auto d = decide_finite_ssf(dfa);
    if (!is_bounded(dfa)) o.require(!d.has_finite_ssf, "unbounded but Yes: " + text);
    if (d.has_finite_ssf) continue;
    o.require(d.witness.has_value() && verify_witness(dfa, *d.witness, 3), "witness fails: " + text);
    if (!o.ok) break;
    const auto& wit = *d.witness;
    for (std::size_t k = 1; k <= 4; ++k) {
      auto [u, v] = half_main_pair(wit.x, wit.w, wit.y, wit.z, k);
      o.require(u != v && dfa.accepts(u) && dfa.accepts(v) && equivalent(u, v, k), "pair fails: " + text);
    }
  }
  return o;
}

Outcome nkp_main_example() {
  Outcome o;
  auto expr = parse_bounded("a* b (ab)*", ab());
  auto params = nkp_parameters(expr);
  o.require(params.roots == Ws({"a", "ab"}) && params.n == 8 && params.k == 31,
            "parameters n=" + std::to_string(params.n) + " k=" + std::to_string(params.k));
  o.require(check_nkp_conditions(expr, params, 60).all_pass(), "conditions fail at cap 60");
  std::unordered_set<KSignature> seen;
  const auto members = bexpr_enumerate(expr, 62);
  for (const Word& w : members.words()) {
    o.require(seen.insert(signature(w, params.k)).second, "collision at " + w.str());
  }
  return o;
}

void oracle_count(Outcome& o) {
  auto gen = rng(1101);
  for (int t = 0; t < 2000; ++t) {
    Word w = random_word(gen, ab(), 0, 12);
    Word x = random_word(gen, ab(), 0, 4);
    o.require(count_occurrences(w, x) == naive_count(w, x), "count_occurrences " + w.str() + "/" + x.str());
  }
}

void oracle_lyndon(Outcome& o) {
  for (const Word& w : all_words_up_to(ab(), 10)) {
    if (w.empty()) continue;
    std::optional<Word> best;
    // Primitive root: shortest d dividing |w| with w = prefix(d)^(|w|/d).
    for (std::size_t d = 1; d <= w.size(); ++d) {
      if (w.size() % d) continue;
      Word p = w.substr(0, d);
      if (p.pow(w.size() / d) != w) continue;
      best = p;
      for (std::size_t r = 1; r < d; ++r) {
        Word rot = p.substr(r, d - r) + p.substr(0, r);
        if (lex_less(rot, *best)) best = rot;
      }
      break;
    }
    o.require(lyndon_root(w) == best, "lyndon_root " + w.str());
  }
}

void oracle_loops(Outcome& o) {
  auto gen = rng(1103);
  auto words = all_words_up_to(ab(), 8);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 60; ++t) {
    auto dfa = dfa_of(random_regex(gen, 3));
    if (dfa.live_count() == 0 || dfa.live_count() > 6) continue;
    ++checked;
    for (Dfa::State q1 = 0; q1 < dfa.live_count(); ++q1) {
      for (Dfa::State q2 = 0; q2 < dfa.live_count(); ++q2) {
        auto loops = loop_language(dfa, q1, q2);
        auto paths = path_language(dfa, q1, q2);
        for (const Word& w : words) {
          o.require(loops.accepts(w) == (walk(dfa, q1, w) == q1 && walk(dfa, q2, w) == q2), "loop language");
          o.require(paths.accepts(w) == (walk(dfa, q1, w) == q2), "path language");
        }
      }
    }
  }
}

void oracle_pstar(Outcome& o) {
  auto gen = rng(1104);
  std::vector<Word> roots;
  for (const Word& p : all_words_up_to(ab(), 3)) {
    if (!p.empty() && is_primitive(p)) roots.push_back(p);
  }
  auto words = all_words_up_to(ab(), 10);
  for (int t = 0; t < 150; ++t) {
    auto text = random_regex(gen, 2);
    auto dfa = dfa_of(text);
    for (const Word& p : roots) {
      if ((dfa.live_count() + 1) * (p.size() + 1) > 11) continue;
      bool oracle = true;
      for (const Word& w : words) oracle = oracle && (!dfa.accepts(w) || in_pstar(w, p));
      o.require(subset_of_pstar(dfa, p) == oracle, "subset_of_pstar " + text + " / " + p.str());
    }
  }
}

void oracle_size_minimal(Outcome& o) {
  auto gen = rng(1105);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 150; ++t) {
    std::vector<Word> ws;
    for (std::size_t i = 1 + gen() % 6; i > 0; --i) ws.push_back(random_word(gen, ab(), 0, 4));
    FiniteLanguage lang(ab(), ws);
    auto universe = default_universe(lang);
    if (universe.size() > 12 || !is_ssf(universe, lang)) continue;
    std::vector<Word> uv(universe.begin(), universe.end());
    std::size_t best = uv.size();
    for (std::uint32_t mask = 0; mask < (1U << uv.size()); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) >= best) continue;
      std::set<Word> xs;
      for (std::size_t i = 0; i < uv.size(); ++i) {
        if (mask >> i & 1U) xs.insert(uv[i]);
      }
      if (naive_is_ssf(xs, lang.words())) best = xs.size();
    }
    auto got = size_minimal(lang, universe);
    o.require(got.size() == best && naive_is_ssf(got, lang.words()), "size_minimal");
    ++checked;
  }
}

Outcome oracle_suites() {
  Outcome o;
  oracle_count(o);
  oracle_lyndon(o);
  oracle_loops(o);
  oracle_pstar(o);
  oracle_size_minimal(o);
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0) base_seed() = std::stoull(arg.substr(7));
  }
  if (const char* env = std::getenv("SSFKIT_SEED")) base_seed() = std::stoull(env);

  const std::vector<Criterion> criteria{
      {1, "inclusion-minimal SSFs of the two-letter square", square_enumeration},
      {2, "inclusion-minimal SSFs of a unary slice", unary_slice},
      {3, "size-minimal SSF of {ac,ad,be,bf}", size_minimal_example},
      {4, "pinned k-abelian pairs", pinned_pairs},
      {5, "regular decisions", regular_decisions},
      {6, "pumped pair family", half_main_family},
      {7, "periodic words separate at |uv|+1", periodic_forward},
      {8, "aperiodic words collide for small k", aperiodic_converse},
      {9, "random regex cross-validation", regex_cross_validation},
      {10, "bounded expression a* b (ab)*", nkp_main_example},
      {11, "oracle suites", oracle_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= kBudget[c.id]) {
      out.ok = false;
      out.detail = "over budget of " + std::to_string(kBudget[c.id]) + " s";
    }
    failures += !out.ok;
    std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << secs << " s)";
    if (!out.ok) std::cout << ": " << out.detail;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
