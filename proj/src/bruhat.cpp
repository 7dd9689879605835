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

#include "suzuki/bruhat.hpp"

#include "suzuki/error.hpp"

namespace suzuki {

BruhatForm decompose_member(const Mat4& g) {
  const Ring& r = g.ring();
  const Element g_m1_1 = g.at(-1, 1);

  if (g_m1_1.code == 0) {
    // Upper triangular: g = h(t) x_+(a, b).
    const Element t = g.at(1, 1);
    return BruhatForm{
        BruhatForm::Cell::kUnit,
        std::nullopt,
        t,
        {r.mul(r.invert(t), g.at(1, 2)),
         r.mul(pow_one_minus_tau(r, t), g.at(2, -1))}};
  }

  // u g lies in s H U for
  //   u = x_+(g_-1,1^-1 g_-2,1,
  //           g_-1,1^-1 (g_21 + g_-2,1^(tau+1) g_-1,1^(-tau))).
  const Element inv = r.invert(g_m1_1);
  const Element g_m2_1 = g.at(-2, 1);
  const Element a1 = r.mul(inv, g_m2_1);
  const Element b1 = r.mul(
      inv, r.add(g.at(2, 1), r.mul(r.mul(r.tits(g_m2_1), g_m2_1),
                                   pow_minus_tau(r, g_m1_1))));
  const Mat4 f = x_plus_matrix(r, a1, b1) * g;
  const Element t = f.at(-1, 1);
  return BruhatForm{
      BruhatForm::Cell::kBig,
      std::pair{a1, b1},
      t,
      {r.mul(r.invert(t), f.at(-1, 2)),
       r.mul(pow_one_minus_tau(r, t), f.at(-2, -1))}};
}

BruhatForm decompose(const Mat4& g) {
  if (!g.ring().is_field()) {
    throw NotAField("Bruhat decomposition needs a field, got " +
                    g.ring().describe());
  }
  const Membership m = is_member(g);
  if (!m) throw NotAMember("cannot decompose a non-member: " + m.describe());
  return decompose_member(g);
}

BruhatForm decompose(const GroupElement& g) {
  if (!g.certified()) return decompose(g.matrix());
  if (!g.ring().is_field()) {
    throw NotAField("Bruhat decomposition needs a field, got " +
                    g.ring().describe());
  }
  return decompose_member(g.matrix());
}

Mat4 recompose_matrix(const Ring& r, const BruhatForm& form) {
  const bool big = form.cell == BruhatForm::Cell::kBig;
  if (big != form.u1.has_value()) {
    throw InvalidParameter("u1 must be present exactly for the big cell");
  }
  const Mat4 tail =
      h_matrix(r, form.t) * x_plus_matrix(r, form.u2.first, form.u2.second);
  if (!big) return tail;
  // x_+(a, b)^-1 = x_+(a, b + a^(1+tau)).
  const auto [a1, b1] = *form.u1;
  const Mat4 u_inv = x_plus_matrix(r, a1, r.add(b1, r.mul(a1, r.tits(a1))));
  return u_inv * s_matrix(r) * tail;
}

GroupElement recompose(const Ring& r, const BruhatForm& form) {
  auto g = GroupElement::certify(recompose_matrix(r, form));
  if (!g) throw NotAMember("recomposed product failed membership");
  return *g;
}

CanonicalKey canonical_key(const Mat4& g) {
  const unsigned bits = static_cast<unsigned>(g.ring().encoding_bits());
  CanonicalKey key;
  unsigned offset = 0;
  for (Element x : g.entries()) {
    const std::uint64_t v = x.code;
    const unsigned w = offset / 64, b = offset % 64;
    key.words[w] |= v << b;
    if (b + bits > 64) key.words[w + 1] |= v >> (64 - b);
    offset += bits;
  }
  return key;
}

CanonicalKey canonical_key(const GroupElement& g) {
  return canonical_key(g.matrix());
}

Mat4 matrix_from_key(const Ring& ring, const CanonicalKey& key) {
  const unsigned bits = static_cast<unsigned>(ring.encoding_bits());
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  Mat4 g(ring);
  unsigned offset = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    const unsigned w = offset / 64, b = offset % 64;
    std::uint64_t v = key.words[w] >> b;
    if (b + bits > 64) v |= key.words[w + 1] << (64 - b);
    g(i / 4, i % 4) = Element{static_cast<std::uint32_t>(v & mask)};
    offset += bits;
  }
  return g;
}

std::size_t key_record_bytes(const Ring& ring) {
  return (16 * static_cast<std::size_t>(ring.encoding_bits()) + 7) / 8;
}

void write_key_record(const Ring& ring, const CanonicalKey& key,
                      std::span<std::uint8_t> out) {
  const std::size_t n = key_record_bytes(ring);
  if (out.size() < n) throw InvalidParameter("key record buffer too small");
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::uint8_t>(key.words[i / 8] >> (8 * (i % 8)));
  }
}

CanonicalKey read_key_record(const Ring& ring,
                             std::span<const std::uint8_t> in) {
  const std::size_t n = key_record_bytes(ring);
  if (in.size() < n) throw InvalidParameter("truncated key record");
  CanonicalKey key;
  for (std::size_t i = 0; i < n; ++i) {
    key.words[i / 8] |= std::uint64_t{in[i]} << (8 * (i % 8));
  }
  return key;
}

}  // namespace suzuki
