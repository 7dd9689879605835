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

#include "suzuki/ring.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "suzuki/error.hpp"

namespace suzuki {

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (; b != 0; b >>= 1, a <<= 1) {
    if (b & 1) r ^= a;
  }
  return r;
}

int poly_degree(std::uint64_t p) {
  int d = -1;
  for (; p != 0; p >>= 1) ++d;
  return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t modulus) {
  const int dm = poly_degree(modulus);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) {
    a ^= modulus << (d - dm);
  }
  return a;
}

bool is_irreducible(std::uint64_t p) {
  const int deg = poly_degree(p);
  if (deg < 1) return false;
  for (std::uint64_t d = 2; poly_degree(d) <= deg / 2; ++d) {
    if (poly_mod(p, d) == 0) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible(int degree) {
  for (std::uint64_t p = std::uint64_t{1} << degree;
       p < (std::uint64_t{2} << degree); ++p) {
    if (is_irreducible(p)) return p;
  }
  throw InvalidParameter("no irreducible polynomial of degree " +
                         std::to_string(degree));
}

namespace {

std::uint32_t order_of(std::uint32_t g, std::uint32_t modulus,
                       std::uint32_t group_order) {
  std::uint32_t x = g;
  for (std::uint32_t k = 1; k <= group_order; ++k) {
    if (x == 1) return k;
    x = static_cast<std::uint32_t>(poly_mod(clmul(x, g), modulus));
  }
  return 0;
}

}  // namespace

Ring::Ring(RingKind kind, int m, const Ring* base)
    : kind_(kind), m_(m), base_(base) {
  field_order_ = 1u << m;
  low_mask_ = field_order_ - 1;
  if (kind == RingKind::kDual) {
    modulus_ = base->modulus_;
    size_ = std::uint64_t{field_order_} * field_order_;
    exp_ = base->exp_;
    log_ = base->log_;
    tits_ = base->tits_;
    return;
  }

  size_ = field_order_;
  modulus_ = static_cast<std::uint32_t>(smallest_irreducible(m));
  const std::uint32_t units = field_order_ - 1;

  // The modulus need not be primitive (2^9 - 1 and 2^11 - 1 are composite),
  // so search for a generator of the unit group.
  std::uint32_t generator = 1;
  for (std::uint32_t g = 1; g < field_order_; ++g) {
    if (order_of(g, modulus_, units) == units) {
      generator = g;
      break;
    }
  }

  exp_.assign(2 * units + 1, 0);
  log_.assign(field_order_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < units; ++k) {
    exp_[k] = static_cast<std::uint16_t>(x);
    exp_[k + units] = static_cast<std::uint16_t>(x);
    log_[x] = static_cast<std::uint16_t>(k);
    x = static_cast<std::uint32_t>(poly_mod(clmul(x, generator), modulus_));
  }
  exp_[2 * units] = 1;

  // tau(x) = x^(2^(n+1)) for m = 2n + 1, i.e. n + 1 squarings.
  const int squarings = (m - 1) / 2 + 1;
  tits_.assign(field_order_, 0);
  for (std::uint32_t a = 0; a < field_order_; ++a) {
    std::uint32_t y = a;
    for (int i = 0; i < squarings; ++i) y = field_mul(y, y);
    tits_[a] = static_cast<std::uint16_t>(y);
  }
}

std::string Ring::describe() const {
  const std::string field = "GF(" + std::to_string(field_order_) + ")";
  return is_field() ? field : field + "[e]/(e^2)";
}

Element Ring::element(std::uint64_t code) const {
  if (code >= size_) {
    throw InvalidParameter("element code " + std::to_string(code) +
                           " out of range for " + describe());
  }
  return Element{static_cast<std::uint32_t>(code)};
}

Element Ring::dual(std::uint32_t a, std::uint32_t b) const {
  if (is_field()) throw InvalidParameter("dual() on a field ring");
  if (a >= field_order_ || b >= field_order_) {
    throw InvalidParameter("dual number component out of range");
  }
  return Element{(a << m_) | b};
}

std::pair<std::uint32_t, std::uint32_t> Ring::parts(Element x) const {
  if (is_field()) return {x.code, 0};
  return {x.code >> m_, x.code & low_mask_};
}

Element Ring::dual_mul(Element x, Element y) const {
  const std::uint32_t a = x.code >> m_, b = x.code & low_mask_;
  const std::uint32_t c = y.code >> m_, d = y.code & low_mask_;
  const std::uint32_t hi = field_mul(a, c);
  const std::uint32_t lo = field_mul(a, d) ^ field_mul(b, c);
  return Element{(hi << m_) | lo};
}

Element Ring::invert(Element x) const {
  if (!is_unit(x)) {
    throw NotInvertible("element " + std::to_string(x.code) +
                        " is not a unit of " + describe());
  }
  if (is_field()) return Element{field_inv(x.code)};
  // (a + b e)^-1 = a^-1 + a^-2 b e  (signs vanish in characteristic 2).
  const std::uint32_t a = x.code >> m_, b = x.code & low_mask_;
  const std::uint32_t ai = field_inv(a);
  return Element{(ai << m_) | field_mul(field_mul(ai, ai), b)};
}

std::vector<Element> Ring::all_elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (std::uint64_t c = 0; c < size_; ++c) {
    out.push_back(Element{static_cast<std::uint32_t>(c)});
  }
  return out;
}

std::vector<Element> Ring::units() const {
  std::vector<Element> out;
  for (std::uint64_t c = 0; c < size_; ++c) {
    const Element x{static_cast<std::uint32_t>(c)};
    if (is_unit(x)) out.push_back(x);
  }
  return out;
}

const Ring& make_ring(RingKind kind, int m) {
  if (m < 1 || m > kMaxExtensionDegree || m % 2 == 0) {
    throw InvalidParameter("extension degree must be odd and in [1, " +
                           std::to_string(kMaxExtensionDegree) + "], got " +
                           std::to_string(m));
  }
  static std::mutex mu;
  static std::map<std::pair<RingKind, int>, std::unique_ptr<Ring>> interned;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = interned[{kind, m}];
  if (!slot) {
    const Ring* base = nullptr;
    if (kind == RingKind::kDual) {
      auto& field = interned[{RingKind::kGF2m, m}];
      if (!field) field.reset(new Ring(RingKind::kGF2m, m, nullptr));
      base = field.get();
    }
    slot.reset(new Ring(kind, m, base));
  }
  return *slot;
}

}  // namespace suzuki
