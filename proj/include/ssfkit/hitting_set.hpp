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

// Exact hitting-set search over a small explicit instance.
//
// The instance is a list of candidate sets over elements 0..num_elements-1.
// A selection of candidates is a hitting set when every element belongs to
// at least one selected candidate. Candidates are identified by index and
// the index order is the tie-break order of every routine here.

#ifndef SSFKIT_HITTING_SET_HPP
#define SSFKIT_HITTING_SET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ssfkit {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), blocks_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { blocks_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { blocks_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1U; }
  void set_all();

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  bool intersects(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;
  std::size_t count_and(const Bitset& other) const;
  std::optional<std::size_t> first() const;
  // Smallest set index >= from.
  std::optional<std::size_t> next(std::size_t from) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  Bitset& subtract(const Bitset& other);

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct HittingSetInstance {
  std::size_t num_elements = 0;
  std::vector<Bitset> candidates;

  bool is_hitting_set(const std::vector<std::size_t>& selection) const;
};

// Minimum-cardinality hitting set, as ascending candidate indices. Among all
// minimum solutions the lexicographically least index list is returned.
// nullopt when the candidates do not cover every element.
std::optional<std::vector<std::size_t>> minimum_hitting_set(const HittingSetInstance& inst);

// Every inclusion-minimal hitting set, each as ascending indices, ordered by
// size and then lexicographically.
std::vector<std::vector<std::size_t>> minimal_hitting_sets(const HittingSetInstance& inst);

}  // namespace ssfkit

#endif  // SSFKIT_HITTING_SET_HPP
