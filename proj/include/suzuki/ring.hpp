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

// Characteristic-2 rings carrying a Tits endomorphism tau, i.e. a ring
// endomorphism with tau(tau(x)) = x^2.
//
// Two families are provided:
//   * GF(2^m), m = 2n+1 odd, with tau(x) = x^(2^(n+1)).
//   * The dual numbers GF(2^m)[eps]/(eps^2), with tau(a + b eps) = tau(a).
//
// Elements are plain codes interpreted relative to a Ring:
//   * GF(2^m): little-endian coefficient bitmask, bit i <-> X^i.
//   * Dual:    (a << m) | b for a + b eps, so ascending codes order pairs
//              lexicographically by (a, b).
// Rings are interned: make_ring returns a reference that lives for the whole
// program, and two rings are equal iff they are the same object.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace suzuki {

enum class RingKind { kGF2m, kDual };

// A ring element code. Meaningless without the Ring it came from.
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

class Ring {
 public:
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  RingKind kind() const { return kind_; }
  // Extension degree of the underlying field.
  int m() const { return m_; }
  // Defining polynomial of the underlying field as a coefficient bitmask
  // (degree m, so bit m is set).
  std::uint32_t modulus() const { return modulus_; }
  // Size of the underlying field, 2^m.
  std::uint32_t field_order() const { return field_order_; }
  // Number of ring elements: 2^m for a field, 2^(2m) for dual numbers.
  std::uint64_t size() const { return size_; }
  bool is_field() const { return kind_ == RingKind::kGF2m; }
  // The GF(2^m) ring a Dual ring is built over; nullptr for fields.
  const Ring* base() const { return base_; }
  // Bits needed to store one element code (m or 2m).
  int encoding_bits() const { return is_field() ? m_ : 2 * m_; }

  // Human-readable name, e.g. "GF(8)" or "GF(8)[e]/(e^2)".
  std::string describe() const;

  Element zero() const { return Element{0}; }
  Element one() const {
    return Element{is_field() ? 1u : (1u << m_)};
  }

  bool contains(Element x) const { return x.code < size_; }
  // Validates a raw code; throws InvalidParameter when out of range.
  Element element(std::uint64_t code) const;

  // Dual numbers only: a + b eps and its parts (as base-field codes).
  Element dual(std::uint32_t a, std::uint32_t b) const;
  std::pair<std::uint32_t, std::uint32_t> parts(Element x) const;

  Element add(Element x, Element y) const { return Element{x.code ^ y.code}; }

  Element mul(Element x, Element y) const {
    if (is_field()) return Element{field_mul(x.code, y.code)};
    return dual_mul(x, y);
  }

  Element square(Element x) const { return mul(x, x); }

  bool is_unit(Element x) const {
    return is_field() ? x.code != 0 : (x.code >> m_) != 0;
  }

  // Throws NotInvertible for non-units.
  Element invert(Element x) const;

  // The Tits endomorphism.
  Element tits(Element x) const {
    if (is_field()) return Element{tits_[x.code]};
    return Element{static_cast<std::uint32_t>(tits_[x.code >> m_]) << m_};
  }

  // Every element exactly once, ascending by code.
  std::vector<Element> all_elements() const;
  std::vector<Element> units() const;

 private:
  friend const Ring& make_ring(RingKind kind, int m);

  Ring(RingKind kind, int m, const Ring* base);

  std::uint32_t field_mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t field_inv(std::uint32_t a) const {
    return exp_[(field_order_ - 1) - log_[a]];
  }
  Element dual_mul(Element x, Element y) const;

  RingKind kind_;
  int m_;
  std::uint32_t modulus_ = 0;
  std::uint32_t field_order_ = 0;
  std::uint64_t size_ = 0;
  const Ring* base_ = nullptr;
  std::uint32_t low_mask_ = 0;

  // Field tables (copied from the base for Dual rings). exp_ is doubled so a
  // sum of two logs never needs reduction.
  std::vector<std::uint16_t> exp_;
  std::vector<std::uint16_t> log_;
  std::vector<std::uint16_t> tits_;
};

inline bool operator==(const Ring& a, const Ring& b) { return &a == &b; }

inline constexpr int kMaxExtensionDegree = 13;

// Returns the interned ring of the given kind and odd degree 1 <= m <= 13.
// Throws InvalidParameter otherwise.
const Ring& make_ring(RingKind kind, int m);

// Carry-less polynomial arithmetic over GF(2); used to build and cross-check
// the field tables.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b);
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t modulus);
int poly_degree(std::uint64_t p);
// Exhaustive trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(std::uint64_t p);
// Smallest (by bitmask) irreducible polynomial of the given degree.
std::uint64_t smallest_irreducible(int degree);

}  // namespace suzuki
