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

// The Suzuki group Sz(R, tau) inside Sp(4, R): membership predicate and the
// standard generators x_+(a, b), x_-(a, b), h(t), s.
//
// g is a member iff g is symplectic and, for every v in the submodule
//   VV = < e1^e2, e1^e-2, e2^e-1, e-2^e-1, v0 >,  v0 = e1^e-1 + e2^e-2,
// rho((g^g) tau(v)) = tau(g rho(v)).
//
// Both sides are additive in v and pick up a factor tau(r) under v -> r v,
// so agreement on the five generators of VV implies agreement on all of VV.
// is_member therefore checks exactly five vector equations.
//
// Conventions: conjugation g^h = h^-1 g h, commutator [x, y] = x y x^-1 y^-1.

#pragma once

#include <array>
#include <optional>
#include <string>

#include "suzuki/linalg.hpp"
#include "suzuki/ring.hpp"

namespace suzuki {

Vec6 v0(const Ring& ring);

// e1^e2, e1^e-2, e2^e-1, e-2^e-1, v0.
std::array<Vec6, 5> vmodule_generators(const Ring& ring);

struct Membership {
  enum class Status { kMember, kNotSymplectic, kRelationFails };

  Status status = Status::kMember;
  // For kRelationFails: index into vmodule_generators() and the V position
  // (0..3 for e1, e2, e-2, e-1) of the first mismatching coordinate.
  int generator = -1;
  int coordinate = -1;

  explicit operator bool() const { return status == Status::kMember; }
  std::string describe() const;
};

Membership is_member(const Mat4& g);

// Same truth value as is_member(g), evaluated with only the entries the five
// generator equations actually read. Used by the enumeration kernels.
bool is_member_fast(const Mat4& g);

class GroupElement {
 public:
  // Runs is_member; the only way to obtain a certified element.
  static std::optional<GroupElement> certify(const Mat4& g);
  static GroupElement uncertified(const Mat4& g) { return GroupElement(g, false); }

  const Mat4& matrix() const { return matrix_; }
  const Ring& ring() const { return matrix_.ring(); }
  bool certified() const { return certified_; }

  // Products and inverses are returned uncertified; callers that need the
  // flag re-run certify().
  GroupElement operator*(const GroupElement& other) const {
    return uncertified(matrix_ * other.matrix_);
  }
  GroupElement inverse() const { return uncertified(symplectic_inverse(matrix_)); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  GroupElement(const Mat4& g, bool certified) : matrix_(g), certified_(certified) {}

  Mat4 matrix_;
  bool certified_;
};

// Exponent shorthands on units: t^(1-tau), t^(tau-1), t^(tau-2), t^(-tau),
// t^(2-tau).
Element pow_one_minus_tau(const Ring& r, Element t);
Element pow_tau_minus_one(const Ring& r, Element t);
Element pow_tau_minus_two(const Ring& r, Element t);
Element pow_minus_tau(const Ring& r, Element t);
Element pow_two_minus_tau(const Ring& r, Element t);

// Raw generator matrices, no certification.
Mat4 x_plus_matrix(const Ring& r, Element a, Element b);
Mat4 x_minus_matrix(const Ring& r, Element a, Element b);
Mat4 h_matrix(const Ring& r, Element t);
Mat4 s_matrix(const Ring& r);

//   [ 1  a  b + a^(1+tau)  a^(2+tau) + b^tau + ab ]
//   [    1  a^tau          b                      ]
//   [       1              a                      ]
//   [                      1                      ]
GroupElement x_plus(const Ring& r, Element a, Element b);
// s x_+(a, b) s.
GroupElement x_minus(const Ring& r, Element a, Element b);
// diag(t, t^(tau-1), t^(1-tau), t^-1); throws NotInvertible for non-units.
GroupElement h(const Ring& r, Element t);
GroupElement s_element(const Ring& r);

Mat4 conjugate(const Mat4& g, const Mat4& by);   // by^-1 g by
Mat4 commutator(const Mat4& x, const Mat4& y);   // x y x^-1 y^-1

}  // namespace suzuki
