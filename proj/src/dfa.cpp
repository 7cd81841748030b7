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

#include "ssfkit/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "ssfkit/combinatorics.hpp"

namespace ssfkit {

using State = Dfa::State;

Dfa Dfa::from_table(AlphabetPtr alphabet, const std::vector<std::vector<State>>& next, State start,
                    const std::vector<bool>& accepting) {
  const std::size_t n = next.size();
  const std::size_t sigma = alphabet->size();
  if (start >= n || accepting.size() != n) throw std::invalid_argument("Dfa::from_table: malformed table");

  std::vector<char> reachable(n, 0);
  std::deque<State> queue{start};
  reachable[start] = 1;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < sigma; ++s) {
      State r = next[q].at(s);
      if (!reachable[r]) {
        reachable[r] = 1;
        queue.push_back(r);
      }
    }
  }
  std::vector<std::vector<State>> reverse(n);
  for (State q = 0; q < n; ++q) {
    for (std::size_t s = 0; s < sigma; ++s) reverse[next[q][s]].push_back(q);
  }
  std::vector<char> live(n, 0);
  for (State q = 0; q < n; ++q) {
    if (accepting[q] && reachable[q]) {
      live[q] = 1;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p : reverse[q]) {
      if (reachable[p] && !live[p]) {
        live[p] = 1;
        queue.push_back(p);
      }
    }
  }
  if (!live[start]) return Dfa(std::move(alphabet), {}, 0, {});

  // Moore refinement over live states; every non-live state is the dead class.
  constexpr std::size_t kDeadClass = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(n, kDeadClass);
  for (State q = 0; q < n; ++q) {
    if (live[q]) cls[q] = accepting[q] ? 1 : 0;
  }
  std::size_t num_classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> refined(n, kDeadClass);
    for (State q = 0; q < n; ++q) {
      if (!live[q]) continue;
      std::vector<std::size_t> key{cls[q]};
      for (std::size_t s = 0; s < sigma; ++s) key.push_back(cls[next[q][s]]);
      refined[q] = ids.emplace(std::move(key), ids.size()).first->second;
    }
    const bool stable = ids.size() == num_classes;
    num_classes = ids.size();
    cls = std::move(refined);
    if (stable) break;
  }

  // Canonical numbering: breadth-first from the start class.
  std::vector<State> representative(num_classes, 0);
  for (State q = 0; q < n; ++q) {
    if (live[q]) representative[cls[q]] = q;
  }
  std::vector<State> number(num_classes, kDeadClass);
  std::vector<std::size_t> order;
  number[cls[start]] = 0;
  order.push_back(cls[start]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    State q = representative[order[i]];
    for (std::size_t s = 0; s < sigma; ++s) {
      std::size_t c = cls[next[q][s]];
      if (c != kDeadClass && number[c] == kDeadClass) {
        number[c] = order.size();
        order.push_back(c);
      }
    }
  }
  const std::size_t live_count = order.size();
  std::vector<std::vector<State>> table(live_count, std::vector<State>(sigma, live_count));
  std::vector<bool> acc(live_count, false);
  for (std::size_t i = 0; i < live_count; ++i) {
    State q = representative[order[i]];
    acc[i] = accepting[q];
    for (std::size_t s = 0; s < sigma; ++s) {
      std::size_t c = cls[next[q][s]];
      table[i][s] = c == kDeadClass ? live_count : number[c];
    }
  }
  return Dfa(std::move(alphabet), std::move(table), 0, std::move(acc));
}

State Dfa::run(State from, const Word& w) const {
  if (!same_alphabet(alphabet_, w.alphabet())) throw AlphabetMismatch();
  State q = from;
  for (Symbol s : w.symbols()) {
    q = next(q, s);
    if (q == dead()) break;
  }
  return q;
}

namespace {

struct Nfa {
  std::vector<std::vector<std::size_t>> eps;
  std::vector<std::vector<std::pair<Symbol, std::size_t>>> moves;

  std::size_t add_state() {
    eps.emplace_back();
    moves.emplace_back();
    return eps.size() - 1;
  }

  // Returns (entry, exit) of a fragment accepting the node's language.
  std::pair<std::size_t, std::size_t> build(const RegexNode& node) {
    const std::size_t in = add_state();
    const std::size_t out = add_state();
    switch (node.kind) {
      case RegexNode::Kind::kEmptySet:
        break;
      case RegexNode::Kind::kEpsilon:
        eps[in].push_back(out);
        break;
      case RegexNode::Kind::kSymbol:
        moves[in].emplace_back(node.symbol, out);
        break;
      case RegexNode::Kind::kUnion:
        for (const auto& child : node.children) {
          auto [ci, co] = build(*child);
          eps[in].push_back(ci);
          eps[co].push_back(out);
        }
        break;
      case RegexNode::Kind::kConcat: {
        std::size_t cursor = in;
        for (const auto& child : node.children) {
          auto [ci, co] = build(*child);
          eps[cursor].push_back(ci);
          cursor = co;
        }
        eps[cursor].push_back(out);
        break;
      }
      case RegexNode::Kind::kStar: {
        auto [ci, co] = build(*node.children.front());
        eps[in].push_back(ci);
        eps[in].push_back(out);
        eps[co].push_back(ci);
        eps[co].push_back(out);
        break;
      }
    }
    return {in, out};
  }

  std::vector<std::size_t> closure(std::vector<std::size_t> states) const {
    std::vector<char> seen(eps.size(), 0);
    for (std::size_t q : states) seen[q] = 1;
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t r : eps[states[i]]) {
        if (!seen[r]) {
          seen[r] = 1;
          states.push_back(r);
        }
      }
    }
    std::sort(states.begin(), states.end());
    return states;
  }
};

}  // namespace

Dfa compile(const Regex& regex) {
  Nfa nfa;
  auto [entry, exit] = nfa.build(regex.root());
  const std::size_t sigma = regex.alphabet()->size();

  std::map<std::vector<std::size_t>, State> ids;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::vector<State>> table;
  auto intern = [&](std::vector<std::size_t> set) {
    auto [it, fresh] = ids.emplace(set, subsets.size());
    if (fresh) subsets.push_back(std::move(set));
    return it->second;
  };
  intern(nfa.closure({entry}));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<State> row(sigma);
    for (std::size_t s = 0; s < sigma; ++s) {
      std::vector<std::size_t> target;
      for (std::size_t q : subsets[i]) {
        for (auto [sym, r] : nfa.moves[q]) {
          if (sym == s) target.push_back(r);
        }
      }
      row[s] = intern(nfa.closure(std::move(target)));
    }
    table.push_back(std::move(row));
  }
  std::vector<bool> accepting(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    accepting[i] = std::binary_search(subsets[i].begin(), subsets[i].end(), exit);
  }
  return Dfa::from_table(regex.alphabet(), table, 0, accepting);
}

Dfa product(const Dfa& a, State from_a, const Dfa& b, State from_b, const std::function<bool(State, State)>& accept) {
  if (!same_alphabet(a.alphabet(), b.alphabet())) throw AlphabetMismatch();
  const std::size_t sigma = a.alphabet()->size();
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  std::vector<std::vector<State>> table;
  auto intern = [&](std::pair<State, State> p) {
    auto [it, fresh] = ids.emplace(p, pairs.size());
    if (fresh) pairs.push_back(p);
    return it->second;
  };
  intern({from_a, from_b});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::vector<State> row(sigma);
    for (std::size_t s = 0; s < sigma; ++s) {
      row[s] = intern({a.next(pairs[i].first, static_cast<Symbol>(s)), b.next(pairs[i].second, static_cast<Symbol>(s))});
    }
    table.push_back(std::move(row));
  }
  std::vector<bool> accepting(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) accepting[i] = accept(pairs[i].first, pairs[i].second);
  return Dfa::from_table(a.alphabet(), table, 0, accepting);
}

namespace {

void require_live(const Dfa& dfa, State q) {
  if (!dfa.is_live(q)) throw std::invalid_argument("state " + std::to_string(q) + " is not a live state");
}

}  // namespace

Dfa loop_language(const Dfa& dfa, State q1, State q2) {
  require_live(dfa, q1);
  require_live(dfa, q2);
  return product(dfa, q1, dfa, q2, [q1, q2](State x, State y) { return x == q1 && y == q2; });
}

Dfa path_language(const Dfa& dfa, State q1, State q2) {
  require_live(dfa, q1);
  require_live(dfa, q2);
  const std::size_t sigma = dfa.alphabet()->size();
  std::vector<std::vector<State>> table(dfa.live_count() + 1, std::vector<State>(sigma));
  for (State q = 0; q <= dfa.live_count(); ++q) {
    for (std::size_t s = 0; s < sigma; ++s) table[q][s] = dfa.next(q, static_cast<Symbol>(s));
  }
  std::vector<bool> accepting(dfa.live_count() + 1, false);
  accepting[q2] = true;
  return Dfa::from_table(dfa.alphabet(), table, q1, accepting);
}

Dfa difference(const Dfa& a, const Dfa& b) {
  return product(a, a.start(), b, b.start(), [&a, &b](State x, State y) { return a.accepting(x) && !b.accepting(y); });
}

Dfa power_star(const AlphabetPtr& alphabet, const Word& p) {
  if (p.empty()) throw std::invalid_argument("power_star: empty word");
  if (!same_alphabet(alphabet, p.alphabet())) throw AlphabetMismatch();
  const std::size_t len = p.size();
  std::vector<std::vector<State>> table(len + 1, std::vector<State>(alphabet->size(), len));
  for (std::size_t i = 0; i < len; ++i) table[i][p[i]] = (i + 1) % len;
  std::vector<bool> accepting(len + 1, false);
  accepting[0] = true;
  return Dfa::from_table(alphabet, table, 0, accepting);
}

namespace {

// Breadth-first search from the given roots; the first popped state
// satisfying `goal` carries the shortlex-least path.
std::optional<Word> bfs(const Dfa& dfa, const std::vector<std::pair<State, std::vector<Symbol>>>& roots,
                        const std::function<bool(State)>& goal) {
  const std::size_t sigma = dfa.alphabet()->size();
  std::vector<std::optional<std::vector<Symbol>>> path(dfa.live_count());
  std::deque<State> queue;
  for (const auto& [q, word] : roots) {
    if (dfa.is_live(q) && !path[q]) {
      path[q] = word;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (goal(q)) return Word(dfa.alphabet(), *path[q]);
    for (std::size_t s = 0; s < sigma; ++s) {
      State r = dfa.next(q, static_cast<Symbol>(s));
      if (dfa.is_live(r) && !path[r]) {
        path[r] = *path[q];
        path[r]->push_back(static_cast<Symbol>(s));
        queue.push_back(r);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> shortest_word(const Dfa& dfa, bool require_nonempty) {
  if (dfa.empty()) return std::nullopt;
  std::vector<std::pair<State, std::vector<Symbol>>> roots;
  if (require_nonempty) {
    for (std::size_t s = 0; s < dfa.alphabet()->size(); ++s) {
      roots.emplace_back(dfa.next(dfa.start(), static_cast<Symbol>(s)), std::vector<Symbol>{static_cast<Symbol>(s)});
    }
  } else {
    roots.emplace_back(dfa.start(), std::vector<Symbol>{});
  }
  return bfs(dfa, roots, [&dfa](State q) { return dfa.accepting(q); });
}

std::optional<Word> shortest_path(const Dfa& dfa, State q1, State q2) {
  require_live(dfa, q1);
  require_live(dfa, q2);
  return bfs(dfa, {{q1, {}}}, [q2](State q) { return q == q2; });
}

bool subset_of_pstar(const Dfa& dfa, const Word& p) {
  if (p.empty() || !is_primitive(p)) throw std::invalid_argument("subset_of_pstar: p must be primitive");
  return difference(dfa, power_star(dfa.alphabet(), p)).empty();
}

std::vector<Word> enumerate(const Dfa& dfa, std::size_t max_len) {
  std::vector<Word> out;
  if (dfa.empty()) return out;
  std::vector<std::pair<State, std::vector<Symbol>>> layer{{dfa.start(), {}}};
  for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::pair<State, std::vector<Symbol>>> next_layer;
    for (auto& [q, word] : layer) {
      if (dfa.accepting(q)) out.emplace_back(dfa.alphabet(), word);
      if (len == max_len) continue;
      for (std::size_t s = 0; s < dfa.alphabet()->size(); ++s) {
        State r = dfa.next(q, static_cast<Symbol>(s));
        if (!dfa.is_live(r)) continue;
        auto extended = word;
        extended.push_back(static_cast<Symbol>(s));
        next_layer.emplace_back(r, std::move(extended));
      }
    }
    layer = std::move(next_layer);
  }
  return out;
}

}  // namespace ssfkit
