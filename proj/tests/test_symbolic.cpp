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

#include <gtest/gtest.h>

#include <random>

#include "suzuki/error.hpp"
#include "suzuki/group.hpp"
#include "suzuki/symbolic.hpp"

namespace suzuki::symbolic {
namespace {

SymPoly a0() { return SymPoly::var(Symbol::kA, 0); }
SymPoly a1() { return SymPoly::var(Symbol::kA, 1); }
SymPoly b0() { return SymPoly::var(Symbol::kB, 0); }
SymPoly t0() { return SymPoly::var(Symbol::kT, 0); }
SymPoly t1() { return SymPoly::var(Symbol::kT, 1); }

const Ring& gf(int m) { return make_ring(RingKind::kGF2m, m); }

// Up to 4 terms, exponents in [0, 3] for a, b and [-3, 3] for t, both levels.
SymPoly random_poly(std::mt19937_64& rng) {
  SymPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (Symbol s : {Symbol::kA, Symbol::kB, Symbol::kT}) {
      for (int level = 0; level < 2; ++level) {
        const int e = s == Symbol::kT ? static_cast<int>(rng() % 7) - 3 : static_cast<int>(rng() % 4);
        if (e != 0) m = m * Monomial::of({s, level}, e);
      }
    }
    p += SymPoly(m);
  }
  return p;
}

TEST(SymPoly, Arithmetic) {
  std::mt19937_64 rng(18);
  for (int rep = 0; rep < 50; ++rep) {
    const SymPoly p = random_poly(rng);
    EXPECT_TRUE(poly_add(p, p).is_zero());
  }
  EXPECT_EQ((a0() + b0()).pow(2), a0().pow(2) + b0().pow(2));
  EXPECT_EQ(poly_mul(poly_mul(a0(), a1()), a0()), SymPoly(Monomial::of({Symbol::kA, 0}, 2) *
                                                          Monomial::of({Symbol::kA, 1})));
  EXPECT_EQ((a0() + SymPoly::one()) * (a0() + SymPoly::one()), a0().pow(2) + SymPoly::one());
}

TEST(SymPoly, ToString) {
  EXPECT_EQ((a0().pow(2) * a1()).to_string(), "a0^2*a1");
  EXPECT_EQ(SymPoly().to_string(), "0");
  EXPECT_EQ(SymPoly::one().to_string(), "1");
  EXPECT_EQ(t0().inverse().to_string(), "t0^-1");
}

TEST(SymPoly, LaurentOnlyInT) {
  EXPECT_THROW(Monomial::of({Symbol::kA, 0}, -1), InvalidParameter);
  EXPECT_THROW(a0().inverse(), InvalidParameter);
  EXPECT_THROW((t0() + SymPoly::one()).inverse(), InvalidParameter);
  EXPECT_EQ(t0() * t0().inverse(), SymPoly::one());
  EXPECT_EQ((t0() * t1().pow(3)).inverse() * t0() * t1().pow(3), SymPoly::one());
}

TEST(PolyTau, Examples) {
  EXPECT_EQ(poly_tau(a0()), a1());
  EXPECT_EQ(poly_tau(poly_tau(a0())), a0().pow(2));
  EXPECT_EQ(poly_tau(t0().inverse()), t1().inverse());
  EXPECT_EQ(poly_tau(t1().inverse()), t0().pow(2).inverse());
}

TEST(PolyTau, RingEndomorphism) {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 300; ++rep) {
    const SymPoly p = random_poly(rng), q = random_poly(rng);
    ASSERT_EQ(poly_tau(p + q), poly_tau(p) + poly_tau(q));
    ASSERT_EQ(poly_tau(p * q), poly_tau(p) * poly_tau(q));
  }
}

TEST(PolyTau, TwiceIsSquaring) {
  std::mt19937_64 rng(20);
  for (int rep = 0; rep < 300; ++rep) {
    const SymPoly p = random_poly(rng);
    ASSERT_EQ(poly_tau(poly_tau(p)), p * p);
  }
}

TEST(SymPoly, EvaluateIsHomomorphism) {
  std::mt19937_64 rng(21);
  const Ring& r = gf(5);
  for (int rep = 0; rep < 300; ++rep) {
    const SymPoly p = random_poly(rng), q = random_poly(rng);
    Assignment at;
    for (auto& v : at.values) v = Element{static_cast<std::uint32_t>(rng() % 32)};
    if (at[Symbol::kT].code == 0) at.values[static_cast<int>(Symbol::kT)] = r.one();
    ASSERT_EQ((p + q).evaluate(r, at), r.add(p.evaluate(r, at), q.evaluate(r, at)));
    ASSERT_EQ((p * q).evaluate(r, at), r.mul(p.evaluate(r, at), q.evaluate(r, at)));
    ASSERT_EQ(p.tau().evaluate(r, at), r.tits(p.evaluate(r, at)));
  }
}

TEST(SymMat, MatchesNumericGenerators) {
  const Ring& r = gf(3);
  const Element a{3}, b{6}, t{5};
  Assignment at;
  at.values[static_cast<int>(Symbol::kA)] = a;
  at.values[static_cast<int>(Symbol::kB)] = b;
  at.values[static_cast<int>(Symbol::kT)] = t;
  auto eval = [&](const SymMat& m) {
    Mat4 g(r);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g(i, j) = m(i, j).evaluate(r, at);
    return g;
  };
  EXPECT_EQ(eval(sym_x_plus(a0(), b0())), x_plus_matrix(r, a, b));
  EXPECT_EQ(eval(sym_x_minus(a0(), b0())), x_minus_matrix(r, a, b));
  EXPECT_EQ(eval(sym_h(t0())), h_matrix(r, t));
  EXPECT_EQ(eval(sym_s()), s_matrix(r));
  EXPECT_EQ(eval(sym_symplectic_inverse(sym_x_plus(a0(), b0()))),
            symplectic_inverse(x_plus_matrix(r, a, b)));
}

TEST(Registry, NineCoreIdentitiesInOrder) {
  std::vector<std::string> names;
  for (const auto& c : identity_registry()) {
    if (!c.supplementary) names.push_back(c.name);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"product-relation", "inverse-formula", "s-squared",
                                             "x-plus-member", "h-member", "weyl-element",
                                             "weyl-element-conjugate", "conjugation",
                                             "corefree-entries"}));
}

TEST(Registry, UnknownName) {
  EXPECT_THROW(check_identity("no-such-identity"), UnknownName);
  EXPECT_THROW(find_identity(""), UnknownName);
}

TEST(CheckIdentity, AllCoreIdentitiesHold) {
  for (const auto& c : identity_registry()) {
    if (c.supplementary) continue;
    const IdentityResult res = check_identity(c.name);
    EXPECT_TRUE(res.holds) << res.to_string();
  }
}

TEST(CheckIdentity, Examples) {
  EXPECT_TRUE(check_identity("product-relation").holds);
  EXPECT_TRUE(check_identity("s-squared").holds);
  EXPECT_TRUE(check_identity("conjugation").holds);
}

// The first Weyl form differs from the true product s h(t^tau) exactly by
// t^-1 versus t^(-tau) in the corner entry.
TEST(CheckIdentity, WeylFirstFormDifference) {
  const IdentityResult res = check_identity("weyl-element");
  EXPECT_FALSE(res.holds);
  EXPECT_EQ(res.entry, 3u);
  EXPECT_EQ(res.difference, "t0^-1 + t1^-1");
  EXPECT_TRUE(check_identity("weyl-element-twisted").holds);
  EXPECT_TRUE(check_identity("weyl-element-conjugate").holds);
}

TEST(CheckIdentity, DifferenceIsReported) {
  SymSides sides;
  sides.lhs = {a0(), b0()};
  sides.rhs = {a0(), a1()};
  const IdentityResult res = check_sides("demo", sides);
  EXPECT_FALSE(res.holds);
  EXPECT_EQ(res.entry, 1u);
  EXPECT_EQ(res.difference, "b0 + a1");
  EXPECT_EQ(res.to_string(), "demo: fail (entry 1, lhs - rhs = b0 + a1)");
}

TEST(Membership, SymbolicNonMemberDetected) {
  // diag(t, t, t^-1, t^-1) is symplectic but not Suzuki for generic t.
  SymMat g;
  g(0, 0) = t0();
  g(1, 1) = t0();
  g(2, 2) = t0().inverse();
  g(3, 3) = t0().inverse();
  const SymSides sides = sym_membership(g);
  ASSERT_EQ(sides.lhs.size(), sides.rhs.size());
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(sides.lhs[i], sides.rhs[i]);
  bool differs = false;
  for (std::size_t i = 16; i < sides.lhs.size(); ++i) differs |= sides.lhs[i] != sides.rhs[i];
  EXPECT_TRUE(differs);
}

TEST(Conjugation, ExactlyOneConventionHolds) {
  EXPECT_TRUE(check_conjugation(ConjugationConvention::kInverseLeft).holds);
  EXPECT_FALSE(check_conjugation(ConjugationConvention::kInverseRight).holds);
}

TEST(Specialization, AgreesWithNumericOverGf8) {
  std::mt19937_64 rng(22);
  for (const auto& c : identity_registry()) {
    for (int rep = 0; rep < 100; ++rep) {
      ASSERT_TRUE(specialization_agrees(c, gf(3), rng)) << c.name;
    }
  }
}

TEST(Specialization, AgreesWithNumericOverOtherRings) {
  std::mt19937_64 rng(23);
  for (const Ring* r : {&gf(5), &make_ring(RingKind::kDual, 3)}) {
    for (const auto& c : identity_registry()) {
      for (int rep = 0; rep < 20; ++rep) {
        ASSERT_TRUE(specialization_agrees(c, *r, rng)) << c.name << " " << r->describe();
      }
    }
  }
}

}  // namespace
}  // namespace suzuki::symbolic
