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

// ssfkit command-line front end. Reports go to stdout, diagnostics to stderr.
// Exit status: 0 success, 1 usage or input error, 2 a checked property failed.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssfkit/bounded.hpp"
#include "ssfkit/combinatorics.hpp"
#include "ssfkit/corpus.hpp"
#include "ssfkit/dfa.hpp"
#include "ssfkit/game.hpp"
#include "ssfkit/infinite.hpp"
#include "ssfkit/kabelian.hpp"
#include "ssfkit/regex.hpp"
#include "ssfkit/regular.hpp"
#include "ssfkit/report.hpp"
#include "ssfkit/ssf.hpp"

namespace {

using namespace ssfkit;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

struct Globals {
  std::string alphabet;
  std::string format = "json";
  std::size_t cap = 0;  // 0: command default
  std::uint64_t seed = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Explicit --alphabet wins; otherwise the sorted letters of `texts`.
AlphabetPtr pick_alphabet(const Globals& g, const std::vector<std::string>& texts) {
  if (!g.alphabet.empty()) return Alphabet::of(g.alphabet);
  std::string letters;
  for (const auto& t : texts) {
    for (const auto& glyph : utf8_glyphs(t)) {
      if (!is_regex_metachar(glyph) && glyph != ";" && glyph != " " && glyph != ",") letters += glyph;
    }
  }
  return Alphabet::sorted_from(letters.empty() ? "a" : letters);
}

std::string show(const Word& w) { return w.display(); }

std::vector<std::string> show_all(const auto& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(show(w));
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i > 0 ? sep : "") + items[i];
  return out;
}

SsfCandidate parse_set(const AlphabetPtr& alphabet, const std::string& text) {
  SsfCandidate set;
  for (const auto& item : split_list(text)) set.insert(Word::parse(alphabet, item));
  return set;
}

// A finite language from a wordlist file or an inline --words list.
struct LanguageSource {
  std::string file;
  std::string words;
};

Corpus load_language(const Globals& g, const LanguageSource& src, Report& report,
                     const std::vector<std::string>& extra_texts = {}) {
  if (!src.file.empty() && !src.words.empty()) throw UsageError("give a wordlist file or --words, not both");
  CorpusOptions options;
  if (!src.file.empty()) {
    const std::string content = read_file(src.file);
    report.input(src.file, content);
    if (!g.alphabet.empty()) options.alphabet = Alphabet::of(g.alphabet);
    std::istringstream in(content);
    return read_corpus(in, src.file, options);
  }
  auto items = split_list(src.words);
  std::vector<std::string> texts = items;
  texts.insert(texts.end(), extra_texts.begin(), extra_texts.end());
  options.alphabet = pick_alphabet(g, texts);
  options.fold_case = false;
  std::vector<Word> words;
  for (const auto& item : items) words.push_back(Word::parse(options.alphabet, item));
  report.input("words", src.words);
  return Corpus{FiniteLanguage(options.alphabet, std::move(words)), "<inline>", false, 0, 0};
}

// Positionals of the form [FILE] K; the file is optional when --words is used.
std::size_t take_file_and_k(const std::vector<std::string>& args, LanguageSource& src) {
  if (args.size() == 2) src.file = args[0];
  const std::string& text = args.back();
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || std::stoull(text) == 0) {
    throw UsageError("K must be a positive integer, got '" + text + "'");
  }
  return std::stoull(text);
}

// Runs `body`, fills timing, prints the report and returns the exit status.
int finish(const Globals& g, Report& report, const std::function<int(Report&)>& body) {
  const ReportFormat format = parse_format(g.format);
  if (g.cap > 0) report.param("cap", std::to_string(g.cap));
  if (g.seed > 0) report.param("seed", std::to_string(g.seed));
  const auto t0 = std::chrono::steady_clock::now();
  const int status = body(report);
  report.timing_us =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << emit_report(report, format);
  return status;
}

Table growth_rows(const std::vector<Word>& words, std::size_t k) {
  Table table{{"n", "words", "classes"}, {}};
  const auto counts = growth_table(words);
  const auto classes = kgrowth_table(words, k);
  for (const auto& [n, c] : counts) {
    table.rows.push_back({std::to_string(n), std::to_string(c), std::to_string(classes.at(n))});
  }
  return table;
}

std::vector<std::size_t> parse_ks(const std::string& text) {
  std::vector<std::size_t> ks;
  for (const auto& item : split_list(text)) ks.push_back(std::stoul(item));
  if (ks.empty()) throw UsageError("--k needs at least one value");
  return ks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separating sets of factors and k-abelian equivalence toolkit", "ssfkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--alphabet", g.alphabet, "Ordered alphabet glyphs (default: discovered from inputs)");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cap", g.cap, "Size or length cap (meaning depends on the command)");
  app.add_option("--seed", g.seed, "Seed recorded with randomized runs");

  std::function<int()> action;

  // count W X
  auto* count = app.add_subcommand("count", "Occurrences of factor X in word W");
  std::string count_w, count_x;
  count->add_option("W", count_w)->required();
  count->add_option("X", count_x)->required();
  count->callback([&] {
    action = [&] {
      Report r{"count"};
      r.param("word", count_w);
      r.param("factor", count_x);
      return finish(g, r, [&](Report& rep) {
        auto alpha = pick_alphabet(g, {count_w, count_x});
        rep.result("count", static_cast<std::int64_t>(
                                count_occurrences(Word::parse(alpha, count_w), Word::parse(alpha, count_x))));
        return kOk;
      });
    };
  });

  // kabel check|classes|growth
  auto* kabel = app.add_subcommand("kabel", "k-abelian equivalence");
  kabel->require_subcommand(1);
  auto* kcheck = kabel->add_subcommand("check", "Is U k-abelian equivalent to V");
  std::string ku, kv;
  std::size_t kk = 1;
  kcheck->add_option("U", ku)->required();
  kcheck->add_option("V", kv)->required();
  kcheck->add_option("K", kk)->required()->check(CLI::PositiveNumber);
  kcheck->callback([&] {
    action = [&] {
      Report r{"kabel check"};
      r.param("u", ku);
      r.param("v", kv);
      r.param("k", std::to_string(kk));
      return finish(g, r, [&](Report& rep) {
        auto alpha = pick_alphabet(g, {ku, kv});
        rep.result("equivalent", equivalent(Word::parse(alpha, ku), Word::parse(alpha, kv), kk));
        return kOk;
      });
    };
  });

  auto* kclasses = kabel->add_subcommand("classes", "k-abelian classes of a wordlist");
  LanguageSource kc_src;
  std::vector<std::string> kc_args;
  std::size_t kc_k = 1;
  kclasses->add_option("ARGS", kc_args, "[FILE] K")->required()->expected(1, 2);
  kclasses->add_option("--words", kc_src.words, "Comma-separated words instead of FILE");
  kclasses->callback([&] {
    action = [&] {
      kc_k = take_file_and_k(kc_args, kc_src);
      Report r{"kabel classes"};
      r.param("k", std::to_string(kc_k));
      return finish(g, r, [&](Report& rep) {
        auto corpus = load_language(g, kc_src, rep);
        auto classes = partition(corpus.words.words(), kc_k);
        Table table{{"class", "size", "members"}, {}};
        for (std::size_t i = 0; i < classes.size(); ++i) {
          table.rows.push_back({std::to_string(i), std::to_string(classes[i].size()), join(show_all(classes[i]), " ")});
        }
        rep.result("classes", static_cast<std::int64_t>(classes.size()));
        rep.result("table", std::move(table));
        return kOk;
      });
    };
  });

  auto* kgrowth = kabel->add_subcommand("growth", "Growth and k-abelian growth per length");
  LanguageSource kg_src;
  std::vector<std::string> kg_args;
  std::size_t kg_k = 1;
  kgrowth->add_option("ARGS", kg_args, "[FILE] K")->required()->expected(1, 2);
  kgrowth->add_option("--words", kg_src.words, "Comma-separated words instead of FILE");
  kgrowth->callback([&] {
    action = [&] {
      kg_k = take_file_and_k(kg_args, kg_src);
      Report r{"kabel growth"};
      r.param("k", std::to_string(kg_k));
      return finish(g, r, [&](Report& rep) {
        auto corpus = load_language(g, kg_src, rep);
        rep.result("growth", growth_rows(corpus.words.words(), kg_k));
        return kOk;
      });
    };
  });

  // ssf verify|min|enumerate|trivial
  auto* ssf = app.add_subcommand("ssf", "Separating sets of factors of a finite language");
  ssf->require_subcommand(1);
  LanguageSource ssf_src;
  std::string ssf_set, ssf_universe;
  auto add_language = [&](CLI::App* cmd) {
    cmd->add_option("FILE", ssf_src.file, "Wordlist, one word per line");
    cmd->add_option("--words", ssf_src.words, "Comma-separated words, () for the empty word");
  };

  auto* sverify = ssf->add_subcommand("verify", "Check that --set separates the language");
  add_language(sverify);
  sverify->add_option("--set", ssf_set, "Comma-separated candidate factors")->required();
  sverify->callback([&] {
    action = [&] {
      Report r{"ssf verify"};
      r.param("set", ssf_set);
      return finish(g, r, [&](Report& rep) {
        auto corpus = load_language(g, ssf_src, rep, {ssf_set});
        auto check = is_ssf(parse_set(corpus.words.alphabet(), ssf_set), corpus.words);
        rep.result("separating", check.separating());
        if (check.counterexample) {
          rep.result("counterexample", std::vector<std::string>{show(check.counterexample->first),
                                                                show(check.counterexample->second)});
        }
        return check ? kOk : kCheckFailed;
      });
    };
  });

  auto* smin = ssf->add_subcommand("min", "A size-minimal SSF (lexicographically least)");
  add_language(smin);
  smin->add_option("--universe", ssf_universe, "Comma-separated allowed factors (default: all factors)");
  smin->callback([&] {
    action = [&] {
      Report r{"ssf min"};
      if (!ssf_universe.empty()) r.param("universe", ssf_universe);
      return finish(g, r, [&](Report& rep) {
        auto corpus = load_language(g, ssf_src, rep, {ssf_universe});
        auto best = ssf_universe.empty() ? size_minimal(corpus.words)
                                         : size_minimal(corpus.words, parse_set(corpus.words.alphabet(), ssf_universe));
        rep.result("size", static_cast<std::int64_t>(best.size()));
        rep.result("ssf", show_all(best));
        return kOk;
      });
    };
  });

  auto* senum = ssf->add_subcommand("enumerate", "All inclusion-minimal SSFs inside a universe");
  add_language(senum);
  senum->add_option("--universe", ssf_universe, "Comma-separated allowed factors (default: all factors)");
  senum->callback([&] {
    action = [&] {
      Report r{"ssf enumerate"};
      if (!ssf_universe.empty()) r.param("universe", ssf_universe);
      return finish(g, r, [&](Report& rep) {
        auto corpus = load_language(g, ssf_src, rep, {ssf_universe});
        auto universe = ssf_universe.empty() ? default_universe(corpus.words)
                                             : parse_set(corpus.words.alphabet(), ssf_universe);
        auto all = enumerate_inclusion_minimal(corpus.words, universe, g.cap > 0 ? g.cap : 20);
        Table table{{"size", "ssf"}, {}};
        for (const auto& s : all) table.rows.push_back({std::to_string(s.size()), join(show_all(s))});
        rep.result("count", static_cast<std::int64_t>(all.size()));
        rep.result("ssfs", std::move(table));
        return kOk;
      });
    };
  });

  auto* strivial = ssf->add_subcommand("trivial", "The language minus its first word");
  add_language(strivial);
  strivial->callback([&] {
    action = [&] {
      Report r{"ssf trivial"};
      return finish(g, r, [&](Report& rep) {
        auto corpus = load_language(g, ssf_src, rep);
        rep.result("ssf", show_all(trivial_ssf(corpus.words)));
        return kOk;
      });
    };
  });

  // regular decide|bounded|nkp|witness-check
  auto* regular = app.add_subcommand("regular", "Regular languages");
  regular->require_subcommand(1);
  std::string regex_text, witness_text;
  auto compile_input = [&](Report& rep) {
    rep.input("regex", regex_text);
    return compile(parse_regex(regex_text, pick_alphabet(g, {regex_text})));
  };

  auto* rdecide = regular->add_subcommand("decide", "Does the language have a finite SSF");
  rdecide->add_option("REGEX", regex_text)->required();
  rdecide->callback([&] {
    action = [&] {
      Report r{"regular decide"};
      r.param("regex", regex_text);
      return finish(g, r, [&](Report& rep) {
        auto dfa = compile_input(rep);
        auto decision = decide_finite_ssf(dfa);
        rep.result("verdict", decision.has_finite_ssf ? "finite-ssf" : "no-finite-ssf");
        if (decision.witness) {
          const auto& w = *decision.witness;
          rep.result("witness", std::vector<std::string>{show(w.x), show(w.w), show(w.y), show(w.z)});
          rep.result("states", std::vector<std::string>{std::to_string(decision.states->first),
                                                        std::to_string(decision.states->second)});
        }
        return kOk;
      });
    };
  });

  auto* rbounded = regular->add_subcommand("bounded", "Is the language bounded");
  rbounded->add_option("REGEX", regex_text)->required();
  rbounded->callback([&] {
    action = [&] {
      Report r{"regular bounded"};
      r.param("regex", regex_text);
      return finish(g, r, [&](Report& rep) {
        auto dfa = compile_input(rep);
        rep.result("bounded", is_bounded(dfa));
        rep.result("states", static_cast<std::int64_t>(dfa.live_count()));
        return kOk;
      });
    };
  });

  auto* rnkp = regular->add_subcommand("nkp", "Parameters and conditions for a bounded expression");
  std::string bexpr_text;
  rnkp->add_option("BEXPR", bexpr_text, "Terms separated by ';', e.g. \"a* b (ab)*\"")->required();
  rnkp->callback([&] {
    action = [&] {
      Report r{"regular nkp"};
      r.param("expr", bexpr_text);
      return finish(g, r, [&](Report& rep) {
        rep.input("expr", bexpr_text);
        auto expr = g.alphabet.empty() ? parse_bounded(bexpr_text) : parse_bounded(bexpr_text, Alphabet::of(g.alphabet));
        auto params = nkp_parameters(expr);
        auto report = check_nkp_conditions(expr, params, g.cap > 0 ? g.cap : 30);
        rep.result("n", static_cast<std::int64_t>(params.n));
        rep.result("k", static_cast<std::int64_t>(params.k));
        rep.result("roots", show_all(params.roots));
        rep.result("condition1", report.condition1);
        rep.result("condition2", report.condition2);
        rep.result("condition3", report.condition3);
        rep.result("words_checked", static_cast<std::int64_t>(report.words_checked));
        Table issues{{"condition", "word", "detail"}, {}};
        for (const auto& [p, q] : report.overlapping_roots) issues.rows.push_back({"1", show(p), show(q)});
        for (const auto& m : report.multi_runs) issues.rows.push_back({"2", show(m.word), show(m.root)});
        for (const auto& b : report.bare_factors) issues.rows.push_back({"3", show(b.word), show(b.factor)});
        rep.result("issues", std::move(issues));
        return report.all_pass() ? kOk : kCheckFailed;
      });
    };
  });

  auto* rwitness = regular->add_subcommand("witness-check", "Verify a witness quadruple x,w,y,z");
  rwitness->add_option("REGEX", regex_text)->required();
  rwitness->add_option("--witness", witness_text, "x,w,y,z with () for the empty word")->required();
  rwitness->callback([&] {
    action = [&] {
      Report r{"regular witness-check"};
      r.param("regex", regex_text);
      r.param("witness", witness_text);
      return finish(g, r, [&](Report& rep) {
        auto parts = split_list(witness_text);
        if (parts.size() != 4) throw UsageError("--witness needs exactly four words");
        rep.input("regex", regex_text);
        auto alpha = pick_alphabet(g, {regex_text, witness_text});
        auto dfa = compile(parse_regex(regex_text, alpha));
        Witness wit{Word::parse(alpha, parts[0]), Word::parse(alpha, parts[1]), Word::parse(alpha, parts[2]),
                    Word::parse(alpha, parts[3])};
        const bool ok = verify_witness(dfa, wit, g.cap > 0 ? g.cap : 3);
        rep.result("valid", ok);
        return ok ? kOk : kCheckFailed;
      });
    };
  });

  // infinite complexity|find-k|find-pair
  auto* infinite = app.add_subcommand("infinite", "Infinite words: up:U,V, thue-morse, fibonacci, or a morphism");
  infinite->require_subcommand(1);
  std::string src_text, ks_text = "1,2,3";
  std::size_t pair_k = 1;

  auto* icomplexity = infinite->add_subcommand("complexity", "Factor and k-abelian complexity table");
  icomplexity->add_option("SRC", src_text)->required();
  icomplexity->add_option("--k", ks_text, "Comma-separated k values");
  icomplexity->callback([&] {
    action = [&] {
      Report r{"infinite complexity"};
      r.param("source", src_text);
      r.param("k", ks_text);
      return finish(g, r, [&](Report& rep) {
        auto src = WordSource::parse(src_text);
        auto profile = complexity_profile(src, g.cap > 0 ? g.cap : 10, parse_ks(ks_text));
        Table table{{"n", "factors"}, {}};
        for (std::size_t k : profile.ks) table.columns.push_back("k=" + std::to_string(k));
        for (const auto& row : profile.rows) {
          std::vector<std::string> cells{std::to_string(row.n), std::to_string(row.factors)};
          for (std::size_t c : row.classes) cells.push_back(std::to_string(c));
          table.rows.push_back(std::move(cells));
        }
        rep.result("source", src.description());
        rep.result("approximate", profile.approximate);
        rep.result("profile", std::move(table));
        return kOk;
      });
    };
  });

  auto* ifindk = infinite->add_subcommand("find-k", "A k separating all factors, or pairs showing none exists");
  ifindk->add_option("SRC", src_text)->required();
  ifindk->add_option("--k", ks_text, "k values probed for aperiodic sources");
  ifindk->callback([&] {
    action = [&] {
      Report r{"infinite find-k"};
      r.param("source", src_text);
      return finish(g, r, [&](Report& rep) {
        auto src = WordSource::parse(src_text);
        rep.result("source", src.description());
        if (const UPWord* up = src.periodic_word()) {
          rep.result("periodic", true);
          rep.result("separating_k", static_cast<std::int64_t>(separating_k(*up)));
          return kOk;
        }
        rep.result("periodic", false);
        rep.result("approximate", true);
        Table table{{"k", "first", "second", "length"}, {}};
        for (std::size_t k : parse_ks(ks_text)) {
          auto pair = find_equivalent_pair(src, k, g.cap > 0 ? g.cap : 200);
          if (pair) {
            table.rows.push_back({std::to_string(k), show(pair->first), show(pair->second), std::to_string(pair->length)});
          } else {
            table.rows.push_back({std::to_string(k), "", "", "none"});
          }
        }
        rep.result("pairs", std::move(table));
        return kOk;
      });
    };
  });

  auto* ifindpair = infinite->add_subcommand("find-pair", "Shortest pair of distinct k-abelian equivalent factors");
  ifindpair->add_option("SRC", src_text)->required();
  ifindpair->add_option("--k", pair_k, "k")->check(CLI::PositiveNumber);
  ifindpair->callback([&] {
    action = [&] {
      Report r{"infinite find-pair"};
      r.param("source", src_text);
      r.param("k", std::to_string(pair_k));
      return finish(g, r, [&](Report& rep) {
        auto src = WordSource::parse(src_text);
        auto pair = find_equivalent_pair(src, pair_k, g.cap > 0 ? g.cap : 200);
        rep.result("found", pair.has_value());
        if (pair) {
          rep.result("pair", std::vector<std::string>{show(pair->first), show(pair->second)});
          rep.result("length", static_cast<std::int64_t>(pair->length));
        }
        rep.result("approximate", !src.is_periodic());
        return kOk;
      });
    };
  });

  // corpus scan|suggest
  auto* corpus_cmd = app.add_subcommand("corpus", "Wordlist corpora");
  corpus_cmd->require_subcommand(1);
  std::string corpus_file;
  std::size_t corpus_k = 1;
  auto* cscan = corpus_cmd->add_subcommand("scan", "All k-abelian equivalent word pairs");
  auto* csuggest = corpus_cmd->add_subcommand("suggest", "Sigma^(<=K) plus greedy longer factors");
  for (auto* cmd : {cscan, csuggest}) {
    cmd->add_option("FILE", corpus_file)->required();
    cmd->add_option("K", corpus_k)->required()->check(CLI::PositiveNumber);
  }
  auto load = [&](Report& rep) {
    auto corpus = load_language(g, {corpus_file, ""}, rep);
    rep.result("words", static_cast<std::int64_t>(corpus.words.size()));
    rep.result("duplicates", static_cast<std::int64_t>(corpus.duplicates));
    rep.result("rejected", static_cast<std::int64_t>(corpus.rejected));
    return corpus;
  };
  cscan->callback([&] {
    action = [&] {
      Report r{"corpus scan"};
      r.param("k", std::to_string(corpus_k));
      return finish(g, r, [&](Report& rep) {
        auto corpus = load(rep);
        Table table{{"first", "second"}, {}};
        for (const auto& [u, v] : scan_corpus(corpus, corpus_k)) table.rows.push_back({show(u), show(v)});
        rep.result("pairs", std::move(table));
        return kOk;
      });
    };
  });
  csuggest->callback([&] {
    action = [&] {
      Report r{"corpus suggest"};
      r.param("k", std::to_string(corpus_k));
      return finish(g, r, [&](Report& rep) {
        auto corpus = load(rep);
        auto suggestion = suggest_ssf(corpus, corpus_k);
        std::vector<std::string> extra;
        for (const Word& x : suggestion) {
          if (x.size() > corpus_k) extra.push_back(show(x));
        }
        rep.result("size", static_cast<std::int64_t>(suggestion.size()));
        rep.result("extra", extra);
        const bool ok = is_ssf(suggestion, corpus.words).separating();
        rep.result("separating", ok);
        return ok ? kOk : kCheckFailed;
      });
    };
  });

  // game
  auto* game = app.add_subcommand("game", "Identify a hidden word by asking factor counts");
  LanguageSource game_src;
  bool adaptive = false;
  std::string secret;
  game->add_option("FILE", game_src.file);
  game->add_option("--words", game_src.words, "Comma-separated words instead of FILE");
  game->add_flag("--adaptive", adaptive, "Choose each question after the previous answer");
  game->add_option("--secret", secret, "Answer automatically for this word instead of reading stdin");
  game->callback([&] {
    action = [&] {
      Report r{"game"};
      r.param("mode", adaptive ? "adaptive" : "static");
      return finish(g, r, [&](Report& rep) {
        auto corpus = load_language(g, game_src, rep, {secret});
        GameOracle oracle;
        if (!secret.empty()) {
          oracle = truthful_oracle(Word::parse(corpus.words.alphabet(), secret));
        } else {
          oracle = [](const Word& question) -> std::size_t {
            std::cerr << "How many times does " << question.display() << " occur? " << std::flush;
            std::size_t answer = 0;
            if (!(std::cin >> answer)) throw UsageError("expected a count on standard input");
            return answer;
          };
        }
        auto transcript = run_game(corpus.words, adaptive ? GameMode::kAdaptive : GameMode::kStatic, oracle);
        Table table{{"question", "answer", "remaining"}, {}};
        for (const auto& step : transcript.steps) {
          table.rows.push_back({show(step.question), std::to_string(step.answer), std::to_string(step.remaining)});
        }
        rep.result("questions", static_cast<std::int64_t>(transcript.steps.size()));
        rep.result("transcript", std::move(table));
        rep.result("inconsistent", transcript.inconsistent);
        if (transcript.identified) rep.result("identified", show(*transcript.identified));
        return transcript.inconsistent ? kCheckFailed : kOk;
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "ssfkit: " << e.what() << "\n";
    return kUsage;
  }
}
