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

// Bruhat normal form over a field F:
//
//   Sz(F) = B  u  U s B,   B = H U,
//
// every element is uniquely one of
//   unit cell:  h(t) x_+(a, b)
//   big cell:   x_+(a1, b1)^-1 s h(t) x_+(a, b)
// with t a unit and a, b, a1, b1 arbitrary.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "suzuki/group.hpp"
#include "suzuki/linalg.hpp"

namespace suzuki {

struct BruhatForm {
  enum class Cell { kUnit, kBig };

  Cell cell = Cell::kUnit;
  std::optional<std::pair<Element, Element>> u1;  // big cell only
  Element t;
  std::pair<Element, Element> u2;

  friend bool operator==(const BruhatForm&, const BruhatForm&) = default;
};

// Throws NotAField for dual-number rings and NotAMember for non-members.
BruhatForm decompose(const Mat4& g);
BruhatForm decompose(const GroupElement& g);
// Same formulas without the field and membership checks; g must be a member
// of Sz over a field.
BruhatForm decompose_member(const Mat4& g);

// Returns the certified canonical product. Throws NotInvertible if t is not
// a unit and InvalidParameter if u1 presence does not match the cell.
GroupElement recompose(const Ring& ring, const BruhatForm& form);
Mat4 recompose_matrix(const Ring& ring, const BruhatForm& form);

// The 16 entry codes packed row-major, entry 0 in the lowest bits, each
// entry taking ring.encoding_bits() bits. Injective for a fixed ring.
struct CanonicalKey {
  static constexpr std::size_t kWords = 7;  // 16 * 26 bits fits in 7 words
  std::array<std::uint64_t, kWords> words{};

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : k.words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

CanonicalKey canonical_key(const Mat4& g);
CanonicalKey canonical_key(const GroupElement& g);
Mat4 matrix_from_key(const Ring& ring, const CanonicalKey& key);

// Width of one spilled key record: ceil(16 * encoding_bits / 8) bytes.
std::size_t key_record_bytes(const Ring& ring);
// Little-endian bytes of the key bit string, truncated to the record width.
void write_key_record(const Ring& ring, const CanonicalKey& key,
                      std::span<std::uint8_t> out);
CanonicalKey read_key_record(const Ring& ring, std::span<const std::uint8_t> in);

}  // namespace suzuki
