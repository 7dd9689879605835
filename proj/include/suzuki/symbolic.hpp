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

// A small computer-algebra kernel for identities that must hold in every
// characteristic-2 ring with a Tits endomorphism.
//
// Each symbol x in {a, b, c, d, t} yields two indeterminates: x0 = x and
// x1 = tau(x). Since tau(tau(x)) = x^2, tau acts on monomials by
//   x0^e -> x1^e,   x1^e -> x0^(2e),
// so two levels are closed under tau. Polynomials have F2 coefficients and
// are stored as monomial sets; t0 and t1 may carry negative exponents
// (t is a unit), nothing else may.
//
// An identity that holds as a polynomial identity holds under every
// specialization x0 -> x, x1 -> tau(x) into a Tits ring.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "suzuki/ring.hpp"

namespace suzuki::symbolic {

enum class Symbol : std::uint8_t { kA, kB, kC, kD, kT };
inline constexpr std::size_t kNumSymbols = 5;
inline constexpr std::size_t kNumVars = 2 * kNumSymbols;

struct SymVar {
  Symbol name;
  int level;  // 0 or 1

  bool laurent() const { return name == Symbol::kT; }
  std::size_t index() const { return 2 * static_cast<std::size_t>(name) + level; }
};

class Monomial {
 public:
  Monomial() = default;
  // Throws InvalidParameter for a negative exponent on a non-laurent var.
  static Monomial of(SymVar v, int exponent = 1);

  int exponent(SymVar v) const { return exps_[v.index()]; }
  bool is_one() const;
  // Throws InvalidParameter if any non-laurent variable is present.
  Monomial inverse() const;
  Monomial tau() const;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void check() const;
  std::array<std::int16_t, kNumVars> exps_{};
};

// Values for a, b, c, d, t; level-1 variables evaluate to tits(value).
struct Assignment {
  std::array<Element, kNumSymbols> values{};

  Element operator[](Symbol s) const { return values[static_cast<std::size_t>(s)]; }
};

class SymPoly {
 public:
  SymPoly() = default;
  static SymPoly one() { return SymPoly(Monomial{}); }
  static SymPoly var(Symbol s, int level = 0) { return SymPoly(Monomial::of({s, level})); }
  explicit SymPoly(const Monomial& m) { terms_.insert(m); }

  bool is_zero() const { return terms_.empty(); }
  const std::set<Monomial>& terms() const { return terms_; }

  SymPoly tau() const;
  SymPoly pow(unsigned e) const;
  // Only single monomials in t are invertible.
  SymPoly inverse() const;
  Element evaluate(const Ring& ring, const Assignment& at) const;
  std::string to_string() const;

  friend SymPoly operator+(const SymPoly& p, const SymPoly& q);
  friend SymPoly operator*(const SymPoly& p, const SymPoly& q);
  SymPoly& operator+=(const SymPoly& q) { return *this = *this + q; }
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  std::set<Monomial> terms_;
};

inline SymPoly poly_add(const SymPoly& p, const SymPoly& q) { return p + q; }
inline SymPoly poly_mul(const SymPoly& p, const SymPoly& q) { return p * q; }
inline SymPoly poly_tau(const SymPoly& p) { return p.tau(); }

// 4x4 matrix of polynomials, row-major, same index conventions as Mat4.
class SymMat {
 public:
  static SymMat zero() { return SymMat(); }
  static SymMat identity();

  const SymPoly& operator()(std::size_t i, std::size_t j) const { return e_[4 * i + j]; }
  SymPoly& operator()(std::size_t i, std::size_t j) { return e_[4 * i + j]; }
  const std::array<SymPoly, 16>& entries() const { return e_; }

  SymMat transpose() const;
  SymMat tau() const;
  friend SymMat operator*(const SymMat& x, const SymMat& y);
  friend bool operator==(const SymMat&, const SymMat&) = default;

 private:
  std::array<SymPoly, 16> e_{};
};

SymMat sym_s();
SymMat sym_x_plus(const SymPoly& a, const SymPoly& b);
SymMat sym_x_minus(const SymPoly& a, const SymPoly& b);
// t must be an invertible monomial.
SymMat sym_h(const SymPoly& t);
// s g^t s, the inverse of a symplectic matrix.
SymMat sym_symplectic_inverse(const SymMat& g);

// Both sides of an identity, flattened to entry lists of equal length.
struct SymSides {
  std::vector<SymPoly> lhs, rhs;
};
struct NumSides {
  std::vector<Element> lhs, rhs;
};

// Membership relations of g as sides: g^t s g = s followed by
// rho((g^g) tau(v)) = tau(g rho(v)) for the five generators of VV.
SymSides sym_membership(const SymMat& g);

struct IdentityCase {
  std::string name;
  std::string statement;
  bool supplementary = false;  // outside the nine core identities
  std::function<SymSides()> symbolic;
  std::function<NumSides(const Ring&, const Assignment&)> numeric;
};

const std::vector<IdentityCase>& identity_registry();
const IdentityCase& find_identity(std::string_view name);

struct IdentityResult {
  std::string name;
  bool holds = false;
  // First differing entry and lhs - rhs there, when !holds.
  std::size_t entry = 0;
  std::string difference;

  std::string to_string() const;
};

IdentityResult check_sides(std::string name, const SymSides& sides);
// Throws UnknownName.
IdentityResult check_identity(std::string_view name);
std::vector<IdentityResult> check_all_identities();

enum class ConjugationConvention {
  kInverseLeft,   // g^h = h^-1 g h
  kInverseRight,  // g^h = h g h^-1
};
// x_+(a, b)^h(t) = x_+(t^(tau-2) a, t^(-tau) b) under the given convention.
IdentityResult check_conjugation(ConjugationConvention convention);

// Draws a random assignment over ring (t a unit) and checks that evaluating
// the symbolic sides reproduces the numeric sides entry by entry.
bool specialization_agrees(const IdentityCase& id, const Ring& ring,
                           std::mt19937_64& rng);

}  // namespace suzuki::symbolic
