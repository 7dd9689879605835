// Copyright 2026 The Suzuki Groups Authors
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

// Materializing Sz(q) in three independent ways:
//
//   * enumerate_all: recompose every Bruhat parameter tuple.
//   * bfs_closure: breadth-first closure of a generating set.
//   * count_streaming: walk every tuple, certify membership and that
//     decompose(recompose(form)) == form, keeping no per-element state.
//     A successful round trip for every form proves the recompositions are
//     pairwise distinct, so the count is |Sz(q)| with O(1) memory.
//
// The kernels here are OpenMP-parallel. Single-threaded reference
// implementations with the same contracts live in suzuki/reference.hpp and
// are what the tests compare against.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <span>
#include <unordered_set>
#include <vector>

#include "suzuki/bruhat.hpp"
#include "suzuki/group.hpp"

namespace suzuki {

class GroupSet {
 public:
  using KeySet = std::unordered_set<CanonicalKey, CanonicalKeyHash>;

  explicit GroupSet(const Ring& ring) : ring_(&ring) {}

  const Ring& ring() const { return *ring_; }
  std::size_t size() const { return keys_.size(); }
  const KeySet& keys() const { return keys_; }
  bool contains(const Mat4& g) const { return keys_.contains(canonical_key(g)); }
  // True if the key was new.
  bool insert(const CanonicalKey& k) { return keys_.insert(k).second; }
  void reserve(std::size_t n) { keys_.reserve(n); }

  friend bool operator==(const GroupSet& a, const GroupSet& b) {
    return a.ring_ == b.ring_ && a.keys_ == b.keys_;
  }

 private:
  const Ring* ring_;
  KeySet keys_;
};

// q^2 (q^2 + 1) (q - 1) for q = 2^m, m odd. Throws InvalidParameter otherwise.
std::uint64_t cell_count(std::uint64_t q);

// Largest field for which enumeration is supported.
inline constexpr std::uint32_t kMaxEnumerationOrder = 32;
// enumerate_all refuses to materialize more keys than this; use the
// streaming entry points instead.
inline constexpr std::uint64_t kDefaultSetLimit = std::uint64_t{1} << 22;

// Calls visit(form) for every Bruhat form: unit cell first, then big cell,
// each in lexicographic order of (t, a, b) resp. (a1, b1, t, a, b) by code.
void for_each_form(const Ring& ring,
                   const std::function<void(const BruhatForm&)>& visit);

GroupSet enumerate_all(const Ring& ring,
                       std::uint64_t set_limit = kDefaultSetLimit);

struct StreamCount {
  std::uint64_t forms = 0;        // tuples visited
  std::uint64_t members = 0;      // recompositions passing is_member
  std::uint64_t round_trips = 0;  // decompose(recompose(f)) == f

  bool certified() const { return forms == members && forms == round_trips; }
  friend bool operator==(const StreamCount&, const StreamCount&) = default;
};

StreamCount count_streaming(const Ring& ring);

// Writes every element's key record, in for_each_form order.
void spill_keys(const Ring& ring, std::ostream& out);

struct Closure {
  GroupSet set;
  bool complete;
};

// Closure of the generators under right multiplication by generators,
// starting from the generators themselves. Stops once the set would exceed
// limit and returns what was reached.
Closure bfs_explore(std::span<const GroupElement> generators, std::size_t limit);
// As bfs_explore but throws LimitExceeded when incomplete. Generators must be
// certified.
GroupSet bfs_closure(std::span<const GroupElement> generators, std::size_t limit);

// {x_+(a, b) : a, b in R} and s.
std::vector<GroupElement> standard_generators(const Ring& ring);

// Smallest subgroup containing x that is closed under conjugation by the
// standard generators. Field rings with q <= 8 only.
GroupSet normal_closure(const GroupElement& x, const Ring& ring, std::size_t limit);

// Uniform over Sz(q): unit cell with probability 1/(q^2+1), big cell
// otherwise, parameters uniform. Deterministic per seed.
GroupElement random_element(const Ring& ring, std::uint64_t seed);
BruhatForm random_form(const Ring& ring, std::mt19937_64& rng);

}  // namespace suzuki
