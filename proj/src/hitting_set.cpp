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

#include "ssfkit/hitting_set.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace ssfkit {

void Bitset::set_all() {
  std::fill(blocks_.begin(), blocks_.end(), ~std::uint64_t{0});
  if (size_ % 64 != 0 && !blocks_.empty()) blocks_.back() = (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::size_t Bitset::count() const {
  std::size_t n = 0;
  for (auto b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

bool Bitset::any() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b != 0; });
}

bool Bitset::intersects(const Bitset& other) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & other.blocks_[i]) return true;
  }
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & ~other.blocks_[i]) return false;
  }
  return true;
}

std::size_t Bitset::count_and(const Bitset& other) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) n += static_cast<std::size_t>(std::popcount(blocks_[i] & other.blocks_[i]));
  return n;
}

std::optional<std::size_t> Bitset::first() const { return next(0); }

std::optional<std::size_t> Bitset::next(std::size_t from) const {
  if (from >= size_) return std::nullopt;
  std::size_t block = from / 64;
  std::uint64_t bits = blocks_[block] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (bits != 0) return block * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++block >= blocks_.size()) return std::nullopt;
    bits = blocks_[block];
  }
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
  return *this;
}

bool HittingSetInstance::is_hitting_set(const std::vector<std::size_t>& selection) const {
  Bitset covered(num_elements);
  for (std::size_t c : selection) covered |= candidates.at(c);
  return covered.count() == num_elements;
}

namespace {

constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max() / 2;

class Solver {
 public:
  explicit Solver(const HittingSetInstance& inst)
      : inst_(inst), hitters_(inst.num_elements, Bitset(inst.candidates.size())) {
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
      for (auto e = inst.candidates[c].first(); e; e = inst.candidates[c].next(*e + 1)) hitters_[*e].set(c);
    }
  }

  // Lower bound on the number of further candidates (from `allowed`) needed
  // to cover `uncovered`: a packing of elements with pairwise disjoint hitter
  // sets, or a counting bound, whichever is larger.
  std::size_t lower_bound(const Bitset& uncovered, const Bitset& allowed) const {
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (auto e = uncovered.first(); e; e = uncovered.next(*e + 1)) {
      const std::size_t h = hitters_[*e].count_and(allowed);
      if (h == 0) return kInfeasible;
      order.emplace_back(h, *e);
    }
    if (order.empty()) return 0;
    std::sort(order.begin(), order.end());
    Bitset used(inst_.candidates.size());
    std::size_t packing = 0;
    for (const auto& [h, e] : order) {
      Bitset hs = hitters_[e];
      hs &= allowed;
      if (!hs.intersects(used)) {
        ++packing;
        used |= hs;
      }
    }
    std::size_t max_cover = 0;
    for (auto c = allowed.first(); c; c = allowed.next(*c + 1)) {
      max_cover = std::max(max_cover, inst_.candidates[*c].count_and(uncovered));
    }
    const std::size_t counting = (order.size() + max_cover - 1) / max_cover;
    return std::max(packing, counting);
  }

  std::vector<std::size_t> greedy(const Bitset& allowed) const {
    Bitset uncovered(inst_.num_elements);
    uncovered.set_all();
    std::vector<std::size_t> chosen;
    while (uncovered.any()) {
      std::size_t best = 0;
      std::size_t best_gain = 0;
      for (auto c = allowed.first(); c; c = allowed.next(*c + 1)) {
        const std::size_t gain = inst_.candidates[*c].count_and(uncovered);
        if (gain > best_gain) {
          best_gain = gain;
          best = *c;
        }
      }
      chosen.push_back(best);
      uncovered.subtract(inst_.candidates[best]);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  // Branch on the uncovered element with the fewest allowed hitters; a single
  // hitter makes the branch a forced choice.
  void optimum_size(std::size_t depth, const Bitset& uncovered, Bitset allowed, std::size_t& best) const {
    if (uncovered.none()) {
      best = std::min(best, depth);
      return;
    }
    if (depth + lower_bound(uncovered, allowed) >= best) return;
    std::size_t pivot = 0;
    std::size_t fewest = kInfeasible;
    for (auto e = uncovered.first(); e; e = uncovered.next(*e + 1)) {
      const std::size_t h = hitters_[*e].count_and(allowed);
      if (h < fewest) {
        fewest = h;
        pivot = *e;
      }
    }
    Bitset branch = hitters_[pivot];
    branch &= allowed;
    for (auto c = branch.first(); c; c = branch.next(*c + 1)) {
      Bitset rest = uncovered;
      rest.subtract(inst_.candidates[*c]);
      allowed.reset(*c);
      optimum_size(depth + 1, rest, allowed, best);
      if (depth + 1 >= best) return;
    }
  }

  // Include-first scan in index order: the first cover of size `target`
  // reached is the lexicographically least one.
  bool least_of_size(std::size_t pos, const Bitset& uncovered, const Bitset& allowed, std::size_t target,
                     std::vector<std::size_t>& chosen) const {
    if (uncovered.none()) return true;
    Bitset tail = allowed;
    for (std::size_t c = 0; c < pos && c < tail.size(); ++c) tail.reset(c);
    if (chosen.size() + lower_bound(uncovered, tail) > target) return false;
    std::optional<std::size_t> next;
    for (auto c = tail.first(); c; c = tail.next(*c + 1)) {
      if (inst_.candidates[*c].intersects(uncovered)) {
        next = c;
        break;
      }
    }
    if (!next) return false;
    Bitset rest = uncovered;
    rest.subtract(inst_.candidates[*next]);
    chosen.push_back(*next);
    if (least_of_size(*next + 1, rest, allowed, target, chosen)) return true;
    chosen.pop_back();
    return least_of_size(*next + 1, uncovered, allowed, target, chosen);
  }

  const HittingSetInstance& inst_;
  std::vector<Bitset> hitters_;
};

}  // namespace

std::optional<std::vector<std::size_t>> minimum_hitting_set(const HittingSetInstance& inst) {
  const std::size_t m = inst.candidates.size();
  Bitset uncovered(inst.num_elements);
  uncovered.set_all();
  if (uncovered.none()) return std::vector<std::size_t>{};

  // Drop empty candidates and candidates dominated by an earlier one: the
  // lexicographically least optimum never uses them.
  Bitset allowed(m);
  Bitset reach(inst.num_elements);
  for (std::size_t c = 0; c < m; ++c) {
    if (inst.candidates[c].none()) continue;
    bool dominated = false;
    for (auto d = allowed.first(); d && !dominated; d = allowed.next(*d + 1)) {
      dominated = inst.candidates[c].is_subset_of(inst.candidates[*d]);
    }
    if (!dominated) {
      allowed.set(c);
      reach |= inst.candidates[c];
    }
  }
  if (reach.count() != inst.num_elements) return std::nullopt;

  Solver solver(inst);
  std::size_t best = solver.greedy(allowed).size();
  solver.optimum_size(0, uncovered, allowed, best);

  std::vector<std::size_t> chosen;
  solver.least_of_size(0, uncovered, allowed, best, chosen);
  return chosen;
}

namespace {

// Minimal hitting set enumeration by candidate/critical-element bookkeeping:
// every chosen candidate keeps at least one element that only it covers.
struct Mmcs {
  const HittingSetInstance& inst;
  const std::vector<Bitset>& hitters;
  std::vector<std::vector<std::size_t>>& out;
  std::vector<std::size_t> chosen;
  std::vector<Bitset> crit;

  void run(Bitset& cand, Bitset& uncovered) {
    if (uncovered.none()) {
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    std::size_t pivot = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (auto e = uncovered.first(); e; e = uncovered.next(*e + 1)) {
      const std::size_t h = hitters[*e].count_and(cand);
      if (h < fewest) {
        fewest = h;
        pivot = *e;
      }
    }
    Bitset branch = hitters[pivot];
    branch &= cand;
    cand.subtract(branch);
    for (auto c = branch.first(); c; c = branch.next(*c + 1)) {
      const Bitset& covers = inst.candidates[*c];
      std::vector<Bitset> saved_crit;
      saved_crit.reserve(chosen.size());
      bool keeps_minimal = true;
      for (std::size_t f : chosen) {
        saved_crit.push_back(crit[f]);
        crit[f].subtract(covers);
        if (crit[f].none()) keeps_minimal = false;
      }
      if (keeps_minimal) {
        crit[*c] = covers;
        crit[*c] &= uncovered;
        Bitset saved_uncovered = uncovered;
        uncovered.subtract(covers);
        chosen.push_back(*c);
        run(cand, uncovered);
        chosen.pop_back();
        uncovered = std::move(saved_uncovered);
      }
      for (std::size_t i = 0; i < chosen.size(); ++i) crit[chosen[i]] = std::move(saved_crit[i]);
      cand.set(*c);
    }
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> minimal_hitting_sets(const HittingSetInstance& inst) {
  const std::size_t m = inst.candidates.size();
  std::vector<Bitset> hitters(inst.num_elements, Bitset(m));
  Bitset cand(m);
  for (std::size_t c = 0; c < m; ++c) {
    if (inst.candidates[c].none()) continue;
    cand.set(c);
    for (auto e = inst.candidates[c].first(); e; e = inst.candidates[c].next(*e + 1)) hitters[*e].set(c);
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& h : hitters) {
    if (h.none()) return out;
  }
  Bitset uncovered(inst.num_elements);
  uncovered.set_all();
  Mmcs search{inst, hitters, out, {}, std::vector<Bitset>(m)};
  search.run(cand, uncovered);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace ssfkit
