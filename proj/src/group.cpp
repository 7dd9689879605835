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

#include "suzuki/group.hpp"

#include <stdexcept>

namespace suzuki {

namespace {

constexpr const char* kGeneratorNames[5] = {"e1^e2", "e1^e-2", "e2^e-1",
                                            "e-2^e-1", "v0"};
constexpr const char* kCoordinateNames[4] = {"e1", "e2", "e-2", "e-1"};

GroupElement certified_or_die(const Mat4& g, const char* what) {
  auto e = GroupElement::certify(g);
  if (!e) throw std::logic_error(std::string(what) + " failed membership");
  return *e;
}

}  // namespace

Vec6 v0(const Ring& ring) {
  Vec6 v(ring);
  v[2] = ring.one();
  v[3] = ring.one();
  return v;
}

std::array<Vec6, 5> vmodule_generators(const Ring& ring) {
  return {Vec6::basis(ring, 0), Vec6::basis(ring, 1), Vec6::basis(ring, 4),
          Vec6::basis(ring, 5), v0(ring)};
}

std::string Membership::describe() const {
  switch (status) {
    case Status::kMember:
      return "member";
    case Status::kNotSymplectic:
      return "not symplectic";
    case Status::kRelationFails:
      return std::string("relation fails on generator ") +
             kGeneratorNames[generator] + " at coordinate " +
             kCoordinateNames[coordinate];
  }
  return "unknown";
}

Membership is_member(const Mat4& g) {
  if (!is_symplectic(g)) return {Membership::Status::kNotSymplectic};
  const Mat6 w = wedge_square(g);
  const auto gens = vmodule_generators(g.ring());
  for (int k = 0; k < 5; ++k) {
    const Vec4 lhs = rho(w * tau_map(gens[k]));
    const Vec4 rhs = tau_map(g * rho(gens[k]));
    for (int c = 0; c < 4; ++c) {
      if (lhs[c] != rhs[c]) {
        return {Membership::Status::kRelationFails, k, c};
      }
    }
  }
  return {};
}

bool is_member_fast(const Mat4& g) {
  const Ring& r = g.ring();
  // g^t s g is symmetric, so the upper triangle decides symplecticity.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      std::uint32_t acc = 0;
      for (std::size_t k = 0; k < 4; ++k) acc ^= r.mul(g(k, i), g(3 - k, j)).code;
      if (acc != (i + j == 3 ? r.one().code : 0u)) return false;
    }
  }
  // rho keeps wedge rows 0, 1, 4, 5 (V positions 0..3); the basis generators
  // of VV are wedge columns 0, 1, 4, 5 and rho maps them to V columns 0..3.
  constexpr std::size_t kKept[4] = {0, 1, 4, 5};
  auto minor = [&](std::size_t row, std::size_t col) {
    const auto [i, j] = kWedgePairs[row];
    const auto [k, l] = kWedgePairs[col];
    return r.add(r.mul(g(i, k), g(j, l)), r.mul(g(i, l), g(j, k)));
  };
  for (std::size_t vr = 0; vr < 4; ++vr) {
    const std::size_t row = kKept[vr];
    for (std::size_t vc = 0; vc < 4; ++vc) {
      if (minor(row, kKept[vc]) != r.tits(g(vr, vc))) return false;
    }
    if (minor(row, 2) != minor(row, 3)) return false;
  }
  return true;
}

std::optional<GroupElement> GroupElement::certify(const Mat4& g) {
  if (!is_member(g)) return std::nullopt;
  return GroupElement(g, true);
}

Element pow_one_minus_tau(const Ring& r, Element t) {
  return r.mul(t, r.invert(r.tits(t)));
}

Element pow_tau_minus_one(const Ring& r, Element t) {
  return r.mul(r.tits(t), r.invert(t));
}

Element pow_tau_minus_two(const Ring& r, Element t) {
  const Element ti = r.invert(t);
  return r.mul(r.tits(t), r.mul(ti, ti));
}

Element pow_minus_tau(const Ring& r, Element t) { return r.invert(r.tits(t)); }

Element pow_two_minus_tau(const Ring& r, Element t) {
  return r.mul(r.square(t), r.invert(r.tits(t)));
}

Mat4 x_plus_matrix(const Ring& r, Element a, Element b) {
  const Element ta = r.tits(a);
  const Element a1t = r.mul(a, ta);   // a^(1+tau)
  const Element a2t = r.mul(a, a1t);  // a^(2+tau)
  Mat4 x = Mat4::identity(r);
  x(0, 1) = a;
  x(0, 2) = r.add(b, a1t);
  x(0, 3) = r.add(r.add(a2t, r.tits(b)), r.mul(a, b));
  x(1, 2) = ta;
  x(1, 3) = b;
  x(2, 3) = a;
  return x;
}

Mat4 s_matrix(const Ring& r) { return symplectic_form(r); }

Mat4 x_minus_matrix(const Ring& r, Element a, Element b) {
  // Conjugating by the antidiagonal permutation reverses both index orders.
  const Mat4 x = x_plus_matrix(r, a, b);
  Mat4 y(r);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) y(i, j) = x(3 - i, 3 - j);
  return y;
}

Mat4 h_matrix(const Ring& r, Element t) {
  Mat4 d(r);
  d(0, 0) = t;
  d(1, 1) = pow_tau_minus_one(r, t);
  d(2, 2) = pow_one_minus_tau(r, t);
  d(3, 3) = r.invert(t);
  return d;
}

GroupElement x_plus(const Ring& r, Element a, Element b) {
  return certified_or_die(x_plus_matrix(r, a, b), "x_plus");
}

GroupElement x_minus(const Ring& r, Element a, Element b) {
  return certified_or_die(x_minus_matrix(r, a, b), "x_minus");
}

GroupElement h(const Ring& r, Element t) {
  return certified_or_die(h_matrix(r, t), "h");
}

GroupElement s_element(const Ring& r) {
  return certified_or_die(s_matrix(r), "s");
}

Mat4 conjugate(const Mat4& g, const Mat4& by) {
  return symplectic_inverse(by) * g * by;
}

Mat4 commutator(const Mat4& x, const Mat4& y) {
  return x * y * symplectic_inverse(x) * symplectic_inverse(y);
}

}  // namespace suzuki
