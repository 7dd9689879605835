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

#include "suzuki/symbolic.hpp"

#include <algorithm>
#include <sstream>

#include "suzuki/error.hpp"
#include "suzuki/group.hpp"
#include "suzuki/linalg.hpp"

namespace suzuki::symbolic {

namespace {

constexpr char kSymbolNames[kNumSymbols] = {'a', 'b', 'c', 'd', 't'};

SymVar var_at(std::size_t index) {
  return {static_cast<Symbol>(index / 2), static_cast<int>(index % 2)};
}

Element power(const Ring& r, Element x, int e) {
  if (e < 0) {
    x = r.invert(x);
    e = -e;
  }
  Element acc = r.one();
  for (int i = 0; i < e; ++i) acc = r.mul(acc, x);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(SymVar v, int exponent) {
  Monomial m;
  m.exps_[v.index()] = static_cast<std::int16_t>(exponent);
  m.check();
  return m;
}

void Monomial::check() const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps_[i] < 0 && !var_at(i).laurent()) {
      throw InvalidParameter("negative exponent on non-unit variable " +
                             std::string(1, kSymbolNames[i / 2]) +
                             std::to_string(i % 2));
    }
  }
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::inverse() const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    m.exps_[i] = static_cast<std::int16_t>(-exps_[i]);
  }
  m.check();
  return m;
}

Monomial Monomial::tau() const {
  Monomial m;
  for (std::size_t s = 0; s < kNumSymbols; ++s) {
    m.exps_[2 * s] = static_cast<std::int16_t>(2 * exps_[2 * s + 1]);
    m.exps_[2 * s + 1] = exps_[2 * s];
  }
  return m;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    m.exps_[i] = static_cast<std::int16_t>(x.exps_[i] + y.exps_[i]);
  }
  return m;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kSymbolNames[i / 2];
    out += static_cast<char>('0' + i % 2);
    if (exps_[i] != 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

// ------------------------------------------------------------------ SymPoly

SymPoly operator+(const SymPoly& p, const SymPoly& q) {
  SymPoly r;
  std::set_symmetric_difference(p.terms_.begin(), p.terms_.end(),
                                q.terms_.begin(), q.terms_.end(),
                                std::inserter(r.terms_, r.terms_.end()));
  return r;
}

SymPoly operator*(const SymPoly& p, const SymPoly& q) {
  SymPoly r;
  for (const Monomial& x : p.terms_) {
    for (const Monomial& y : q.terms_) {
      const Monomial m = x * y;
      // Coefficients live in F2: a repeated monomial cancels.
      if (auto [it, inserted] = r.terms_.insert(m); !inserted) r.terms_.erase(it);
    }
  }
  return r;
}

SymPoly SymPoly::tau() const {
  SymPoly r;
  // tau is injective on monomials, so no cancellation can occur.
  for (const Monomial& m : terms_) r.terms_.insert(m.tau());
  return r;
}

SymPoly SymPoly::pow(unsigned e) const {
  SymPoly acc = one();
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

SymPoly SymPoly::inverse() const {
  if (terms_.size() != 1) {
    throw InvalidParameter("only monomials are invertible, got " + to_string());
  }
  return SymPoly(terms_.begin()->inverse());
}

Element SymPoly::evaluate(const Ring& r, const Assignment& at) const {
  std::uint32_t acc = 0;
  for (const Monomial& m : terms_) {
    Element term = r.one();
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const SymVar v = var_at(i);
      const int e = m.exponent(v);
      if (e == 0) continue;
      Element base = at[v.name];
      if (v.level == 1) base = r.tits(base);
      term = r.mul(term, power(r, base, e));
    }
    acc ^= term.code;
  }
  return Element{acc};
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Monomial& m : terms_) {
    if (!out.empty()) out += " + ";
    out += m.to_string();
  }
  return out;
}

// ------------------------------------------------------------------- SymMat

SymMat SymMat::identity() {
  SymMat m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = SymPoly::one();
  return m;
}

SymMat SymMat::transpose() const {
  SymMat m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(j, i) = (*this)(i, j);
  return m;
}

SymMat SymMat::tau() const {
  SymMat m;
  for (std::size_t i = 0; i < 16; ++i) m.e_[i] = e_[i].tau();
  return m;
}

SymMat operator*(const SymMat& x, const SymMat& y) {
  SymMat m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) m(i, j) += x(i, k) * y(k, j);
  return m;
}

SymMat sym_s() {
  SymMat m;
  for (std::size_t i = 0; i < 4; ++i) m(i, 3 - i) = SymPoly::one();
  return m;
}

SymMat sym_x_plus(const SymPoly& a, const SymPoly& b) {
  const SymPoly ta = a.tau();
  SymMat x = SymMat::identity();
  x(0, 1) = a;
  x(0, 2) = b + a * ta;
  x(0, 3) = a * a * ta + b.tau() + a * b;
  x(1, 2) = ta;
  x(1, 3) = b;
  x(2, 3) = a;
  return x;
}

SymMat sym_x_minus(const SymPoly& a, const SymPoly& b) {
  return sym_s() * sym_x_plus(a, b) * sym_s();
}

SymMat sym_h(const SymPoly& t) {
  const SymPoly ti = t.inverse();
  const SymPoly tt = t.tau();
  SymMat m;
  m(0, 0) = t;
  m(1, 1) = tt * ti;
  m(2, 2) = t * tt.inverse();
  m(3, 3) = ti;
  return m;
}

SymMat sym_symplectic_inverse(const SymMat& g) {
  return sym_s() * g.transpose() * sym_s();
}

SymSides sym_membership(const SymMat& g) {
  SymSides sides;
  const SymMat form = g.transpose() * sym_s() * g;
  const SymMat s = sym_s();
  for (std::size_t i = 0; i < 16; ++i) {
    sides.lhs.push_back(form.entries()[i]);
    sides.rhs.push_back(s.entries()[i]);
  }
  // Wedge rows kept by rho, and the generator columns of VV. The basis
  // generators are fixed by tau, so tau(v) = v.
  constexpr std::size_t kKept[4] = {0, 1, 4, 5};
  auto minor = [&](std::size_t row, std::size_t col) {
    const auto [i, j] = kWedgePairs[row];
    const auto [k, l] = kWedgePairs[col];
    return g(i, k) * g(j, l) + g(i, l) * g(j, k);
  };
  for (std::size_t gen = 0; gen < 4; ++gen) {
    for (std::size_t vr = 0; vr < 4; ++vr) {
      sides.lhs.push_back(minor(kKept[vr], kKept[gen]));
      sides.rhs.push_back(g(vr, gen).tau());
    }
  }
  for (std::size_t vr = 0; vr < 4; ++vr) {
    sides.lhs.push_back(minor(kKept[vr], 2) + minor(kKept[vr], 3));
    sides.rhs.push_back(SymPoly());
  }
  return sides;
}

// ----------------------------------------------------------------- registry

namespace {

using S = Symbol;

SymPoly a0() { return SymPoly::var(S::kA); }
SymPoly b0() { return SymPoly::var(S::kB); }
SymPoly c0() { return SymPoly::var(S::kC); }
SymPoly d0() { return SymPoly::var(S::kD); }
SymPoly t0() { return SymPoly::var(S::kT); }

void append(std::vector<SymPoly>& out, const SymMat& m) {
  out.insert(out.end(), m.entries().begin(), m.entries().end());
}

void append(std::vector<Element>& out, const Mat4& m) {
  out.insert(out.end(), m.entries().begin(), m.entries().end());
}

SymSides matrix_sides(const SymMat& lhs, const SymMat& rhs) {
  SymSides s;
  append(s.lhs, lhs);
  append(s.rhs, rhs);
  return s;
}

NumSides matrix_sides(const Mat4& lhs, const Mat4& rhs) {
  NumSides s;
  append(s.lhs, lhs);
  append(s.rhs, rhs);
  return s;
}

// Numeric twin of sym_membership, built from the linalg module.
NumSides num_membership(const Mat4& g) {
  const Ring& r = g.ring();
  NumSides sides;
  append(sides.lhs, g.transpose() * symplectic_form(r) * g);
  append(sides.rhs, symplectic_form(r));
  const Mat6 w = wedge_square(g);
  const auto gens = vmodule_generators(r);
  for (const Vec6& v : gens) {
    const Vec4 lhs = rho(w * tau_map(v));
    const Vec4 rhs = tau_map(g * rho(v));
    for (std::size_t i = 0; i < 4; ++i) {
      sides.lhs.push_back(lhs[i]);
      sides.rhs.push_back(rhs[i]);
    }
  }
  return sides;
}

// t^(1-tau) as a symbolic monomial.
SymPoly t_one_minus_tau() { return t0() * t0().tau().inverse(); }

SymMat weyl_product() {
  const SymPoly a = t_one_minus_tau();
  return sym_x_plus(a, t0().inverse()) * sym_x_minus(SymPoly(), t0()) *
         sym_x_plus(a, SymPoly());
}

Mat4 num_weyl_product(const Ring& r, Element t) {
  const Element a = pow_one_minus_tau(r, t);
  return x_plus_matrix(r, a, r.invert(t)) * x_minus_matrix(r, r.zero(), t) *
         x_plus_matrix(r, a, r.zero());
}

SymMat sym_entries_g(const SymPoly& a, const SymPoly& b) {
  const SymMat xm = sym_x_minus(SymPoly(), SymPoly::one());
  return xm * sym_h(t0()) * sym_x_plus(a, b) * xm;
}

Mat4 num_entries_g(const Ring& r, Element t, Element a, Element b) {
  const Mat4 xm = x_minus_matrix(r, r.zero(), r.one());
  return xm * h_matrix(r, t) * x_plus_matrix(r, a, b) * xm;
}

std::vector<IdentityCase> build_registry() {
  std::vector<IdentityCase> reg;

  reg.push_back(
      {"product-relation", "x+(a,b) x+(c,d) = x+(a+c, b+d+a^tau c)", false,
       [] {
         return matrix_sides(sym_x_plus(a0(), b0()) * sym_x_plus(c0(), d0()),
                             sym_x_plus(a0() + c0(), b0() + d0() + a0().tau() * c0()));
       },
       [](const Ring& r, const Assignment& v) {
         const Element a = v[S::kA], b = v[S::kB], c = v[S::kC], d = v[S::kD];
         return matrix_sides(
             x_plus_matrix(r, a, b) * x_plus_matrix(r, c, d),
             x_plus_matrix(r, r.add(a, c),
                           r.add(r.add(b, d), r.mul(r.tits(a), c))));
       }});

  reg.push_back(
      {"inverse-formula", "x+(a,b) x+(a, b+a^(1+tau)) = 1", false,
       [] {
         return matrix_sides(
             sym_x_plus(a0(), b0()) * sym_x_plus(a0(), b0() + a0() * a0().tau()),
             SymMat::identity());
       },
       [](const Ring& r, const Assignment& v) {
         const Element a = v[S::kA], b = v[S::kB];
         return matrix_sides(
             x_plus_matrix(r, a, b) *
                 x_plus_matrix(r, a, r.add(b, r.mul(a, r.tits(a)))),
             Mat4::identity(r));
       }});

  reg.push_back(
      {"s-squared", "s s = 1 and s in Sz", false,
       [] {
         SymSides sides = matrix_sides(sym_s() * sym_s(), SymMat::identity());
         SymSides member = sym_membership(sym_s());
         sides.lhs.insert(sides.lhs.end(), member.lhs.begin(), member.lhs.end());
         sides.rhs.insert(sides.rhs.end(), member.rhs.begin(), member.rhs.end());
         return sides;
       },
       [](const Ring& r, const Assignment&) {
         NumSides sides = matrix_sides(s_matrix(r) * s_matrix(r), Mat4::identity(r));
         NumSides member = num_membership(s_matrix(r));
         sides.lhs.insert(sides.lhs.end(), member.lhs.begin(), member.lhs.end());
         sides.rhs.insert(sides.rhs.end(), member.rhs.begin(), member.rhs.end());
         return sides;
       }});

  reg.push_back(
      {"x-plus-member", "x+(a,b) in Sz for formal a, b", false,
       [] { return sym_membership(sym_x_plus(a0(), b0())); },
       [](const Ring& r, const Assignment& v) {
         return num_membership(x_plus_matrix(r, v[S::kA], v[S::kB]));
       }});

  reg.push_back(
      {"h-member", "h(t) in Sz for a formal unit t", false,
       [] { return sym_membership(sym_h(t0())); },
       [](const Ring& r, const Assignment& v) {
         return num_membership(h_matrix(r, v[S::kT]));
       }});

  reg.push_back(
      {"weyl-element",
       "s h(t) = x+(t^(1-tau), t^-1) x-(0,t) x+(t^(1-tau), 0)", false,
       [] { return matrix_sides(sym_s() * sym_h(t0()), weyl_product()); },
       [](const Ring& r, const Assignment& v) {
         return matrix_sides(s_matrix(r) * h_matrix(r, v[S::kT]),
                             num_weyl_product(r, v[S::kT]));
       }});

  reg.push_back(
      {"weyl-element-conjugate",
       "x+(t^(1-tau), t^-1) x-(0,t) x+(t^(1-tau), 0) = x-(0,t)^x+(t^(1-tau), 0)",
       false,
       [] {
         const SymMat u = sym_x_plus(t_one_minus_tau(), SymPoly());
         return matrix_sides(weyl_product(), sym_symplectic_inverse(u) *
                                                 sym_x_minus(SymPoly(), t0()) * u);
       },
       [](const Ring& r, const Assignment& v) {
         const Element t = v[S::kT];
         const Mat4 u = x_plus_matrix(r, pow_one_minus_tau(r, t), r.zero());
         return matrix_sides(num_weyl_product(r, t),
                             conjugate(x_minus_matrix(r, r.zero(), t), u));
       }});

  reg.push_back(
      {"conjugation", "x+(a,b)^h(t) = x+(t^(tau-2) a, t^(-tau) b), g^h = h^-1 g h",
       false,
       [] {
         const SymMat h = sym_h(t0());
         const SymPoly tt = t0().tau();
         return matrix_sides(
             sym_symplectic_inverse(h) * sym_x_plus(a0(), b0()) * h,
             sym_x_plus(tt * t0().pow(2).inverse() * a0(), tt.inverse() * b0()));
       },
       [](const Ring& r, const Assignment& v) {
         const Element t = v[S::kT];
         return matrix_sides(
             conjugate(x_plus_matrix(r, v[S::kA], v[S::kB]), h_matrix(r, t)),
             x_plus_matrix(r, r.mul(pow_tau_minus_two(r, t), v[S::kA]),
                           r.mul(pow_minus_tau(r, t), v[S::kB])));
       }});

  reg.push_back(
      {"corefree-entries",
       "g = x-(0,1) h(t) x+(a,b) x-(0,1): g_{2,-2} = t^(tau-1) a^tau, "
       "g_{2,-1} = t^(tau-1) b, and g_{-1,1} = t + t^-1 when a = b = 0",
       false,
       [] {
         const SymMat g = sym_entries_g(a0(), b0());
         const SymMat g0 = sym_entries_g(SymPoly(), SymPoly());
         const SymPoly k = t0().tau() * t0().inverse();
         SymSides s;
         s.lhs = {g(pos(2), pos(-2)), g(pos(2), pos(-1)), g0(pos(-1), pos(1))};
         s.rhs = {k * a0().tau(), k * b0(), t0() + t0().inverse()};
         return s;
       },
       [](const Ring& r, const Assignment& v) {
         const Element t = v[S::kT];
         const Mat4 g = num_entries_g(r, t, v[S::kA], v[S::kB]);
         const Mat4 g0 = num_entries_g(r, t, r.zero(), r.zero());
         const Element k = pow_tau_minus_one(r, t);
         NumSides s;
         s.lhs = {g.at(2, -2), g.at(2, -1), g0.at(-1, 1)};
         s.rhs = {r.mul(k, r.tits(v[S::kA])), r.mul(k, v[S::kB]),
                  r.add(t, r.invert(t))};
         return s;
       }});

  reg.push_back(
      {"weyl-element-twisted",
       "s h(t^tau) = x+(t^(1-tau), t^-1) x-(0,t) x+(t^(1-tau), 0)", true,
       [] { return matrix_sides(sym_s() * sym_h(t0().tau()), weyl_product()); },
       [](const Ring& r, const Assignment& v) {
         return matrix_sides(s_matrix(r) * h_matrix(r, r.tits(v[S::kT])),
                             num_weyl_product(r, v[S::kT]));
       }});

  return reg;
}

}  // namespace

const std::vector<IdentityCase>& identity_registry() {
  static const std::vector<IdentityCase> reg = build_registry();
  return reg;
}

const IdentityCase& find_identity(std::string_view name) {
  for (const IdentityCase& c : identity_registry()) {
    if (c.name == name) return c;
  }
  throw UnknownName("unknown identity: " + std::string(name));
}

IdentityResult check_sides(std::string name, const SymSides& sides) {
  IdentityResult res{std::move(name), true, 0, ""};
  if (sides.lhs.size() != sides.rhs.size()) {
    throw std::logic_error("identity sides of different length");
  }
  for (std::size_t i = 0; i < sides.lhs.size(); ++i) {
    if (sides.lhs[i] != sides.rhs[i]) {
      res.holds = false;
      res.entry = i;
      res.difference = (sides.lhs[i] + sides.rhs[i]).to_string();
      break;
    }
  }
  return res;
}

IdentityResult check_identity(std::string_view name) {
  const IdentityCase& c = find_identity(name);
  return check_sides(c.name, c.symbolic());
}

std::vector<IdentityResult> check_all_identities() {
  std::vector<IdentityResult> out;
  for (const IdentityCase& c : identity_registry()) {
    out.push_back(check_sides(c.name, c.symbolic()));
  }
  return out;
}

std::string IdentityResult::to_string() const {
  std::ostringstream os;
  os << name << ": " << (holds ? "pass" : "fail");
  if (!holds) os << " (entry " << entry << ", lhs - rhs = " << difference << ")";
  return os.str();
}

IdentityResult check_conjugation(ConjugationConvention convention) {
  const SymMat h = sym_h(t0());
  const SymMat x = sym_x_plus(a0(), b0());
  const SymMat lhs = convention == ConjugationConvention::kInverseLeft
                         ? sym_symplectic_inverse(h) * x * h
                         : h * x * sym_symplectic_inverse(h);
  const SymPoly tt = t0().tau();
  const SymMat rhs =
      sym_x_plus(tt * t0().pow(2).inverse() * a0(), tt.inverse() * b0());
  return check_sides(convention == ConjugationConvention::kInverseLeft
                         ? "conjugation (h^-1 g h)"
                         : "conjugation (h g h^-1)",
                     matrix_sides(lhs, rhs));
}

bool specialization_agrees(const IdentityCase& id, const Ring& ring,
                           std::mt19937_64& rng) {
  Assignment at;
  std::uniform_int_distribution<std::uint64_t> any(0, ring.size() - 1);
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    Element x;
    do {
      x = Element{static_cast<std::uint32_t>(any(rng))};
    } while (static_cast<Symbol>(i) == Symbol::kT && !ring.is_unit(x));
    at.values[i] = x;
  }
  const SymSides sym = id.symbolic();
  const NumSides num = id.numeric(ring, at);
  if (sym.lhs.size() != num.lhs.size() || sym.rhs.size() != num.rhs.size()) {
    return false;
  }
  for (std::size_t i = 0; i < sym.lhs.size(); ++i) {
    if (sym.lhs[i].evaluate(ring, at) != num.lhs[i]) return false;
    if (sym.rhs[i].evaluate(ring, at) != num.rhs[i]) return false;
  }
  return true;
}

}  // namespace suzuki::symbolic
