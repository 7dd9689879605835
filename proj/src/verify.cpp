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

#include "suzuki/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>
#include <sstream>

#include "suzuki/bruhat.hpp"
#include "suzuki/enumerate.hpp"
#include "suzuki/error.hpp"
#include "suzuki/group.hpp"

namespace suzuki {

namespace {

using Failure = std::optional<std::string>;

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

void require_field(const Ring& r, std::string_view suite) {
  if (!r.is_field()) {
    throw NotAField("suite " + std::string(suite) + " needs a field, got " +
                    r.describe());
  }
}

std::string elem(const Ring& r, Element x) {
  if (r.is_field()) return std::to_string(x.code);
  const auto [a, b] = r.parts(x);
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

std::string form_string(const Ring& r, const BruhatForm& f) {
  std::ostringstream os;
  os << (f.cell == BruhatForm::Cell::kUnit ? "unit" : "big");
  if (f.u1) os << " u1=(" << elem(r, f.u1->first) << "," << elem(r, f.u1->second) << ")";
  os << " t=" << elem(r, f.t) << " u2=(" << elem(r, f.u2.first) << ","
     << elem(r, f.u2.second) << ")";
  return os.str();
}

// Runs check(i) for i in [0, n) in parallel and collects failures.
template <typename Check>
std::vector<std::string> run_cases(std::uint64_t n, const Check& check) {
  std::vector<Failure> results(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) results[i] = check(static_cast<std::uint64_t>(i));
  std::vector<std::string> failures;
  for (auto& f : results) {
    if (f) failures.push_back(std::move(*f));
  }
  return failures;
}

// A product of 1..6 random generators x+(a,b), h(t), s; also returns the
// word for replay.
std::pair<Mat4, std::string> random_word(const Ring& r, std::mt19937_64& rng) {
  const std::vector<Element> units = r.units();
  std::uniform_int_distribution<std::uint64_t> any(0, r.size() - 1);
  std::uniform_int_distribution<std::size_t> unit(0, units.size() - 1);
  std::uniform_int_distribution<int> kind(0, 2), length(1, 6);
  Mat4 g = Mat4::identity(r);
  std::string word;
  for (int n = length(rng); n > 0; --n) {
    switch (kind(rng)) {
      case 0: {
        const Element a{static_cast<std::uint32_t>(any(rng))};
        const Element b{static_cast<std::uint32_t>(any(rng))};
        g = g * x_plus_matrix(r, a, b);
        word += "x+(" + elem(r, a) + "," + elem(r, b) + ")";
        break;
      }
      case 1: {
        const Element t = units[unit(rng)];
        g = g * h_matrix(r, t);
        word += "h(" + elem(r, t) + ")";
        break;
      }
      default:
        g = g * s_matrix(r);
        word += "s";
    }
  }
  return {g, word};
}

// ------------------------------------------------------------------ suites

void closure_suite(const Ring& r, std::uint64_t samples, std::uint64_t seed,
                   SuiteReport& rep) {
  rep.cases = samples;
  rep.failures = run_cases(samples, [&](std::uint64_t i) -> Failure {
    auto rng = case_rng(seed, i);
    const auto [f, fw] = random_word(r, rng);
    const auto [g, gw] = random_word(r, rng);
    if (!is_member(f) || !is_member(g)) {
      return "case " + std::to_string(i) + ": generator word not a member: " + fw + " | " + gw;
    }
    if (const Membership m = is_member(f * g); !m) {
      return "case " + std::to_string(i) + ": f*g " + m.describe() + "; f=" + fw + " g=" + gw;
    }
    if (const Membership m = is_member(symplectic_inverse(g)); !m) {
      return "case " + std::to_string(i) + ": g^-1 " + m.describe() + "; g=" + gw;
    }
    return std::nullopt;
  });
}

void roundtrip_suite(const Ring& r, std::uint64_t samples, std::uint64_t seed,
                     SuiteReport& rep) {
  require_field(r, "roundtrip");
  const std::uint64_t domain = cell_count(r.field_order());

  auto check_form = [&r](const BruhatForm& f) -> Failure {
    const Mat4 g = recompose_matrix(r, f);
    if (!is_member(g)) return "recompose not a member: " + form_string(r, f);
    const BruhatForm back = decompose(g);
    if (!(back == f)) return "decompose(recompose(f)) != f: " + form_string(r, f);
    if (!(recompose_matrix(r, back) == g)) {
      return "recompose(decompose(g)) != g: " + form_string(r, f);
    }
    return std::nullopt;
  };

  if (domain <= kExhaustiveLimit) {
    std::vector<BruhatForm> forms;
    forms.reserve(domain);
    for_each_form(r, [&](const BruhatForm& f) { forms.push_back(f); });
    rep.failures = run_cases(forms.size(), [&](std::uint64_t i) { return check_form(forms[i]); });
    rep.cases = forms.size();
  } else {
    rep.failures = run_cases(samples, [&](std::uint64_t i) {
      auto rng = case_rng(seed, i);
      return check_form(random_form(r, rng));
    });
    rep.cases = samples;
  }

  // Elements built independently of the parametrization.
  auto words = run_cases(samples, [&](std::uint64_t i) -> Failure {
    auto rng = case_rng(seed ^ 0x5a5a5a5aull, i);
    const auto [g, w] = random_word(r, rng);
    if (!(recompose_matrix(r, decompose(g)) == g)) {
      return "recompose(decompose(g)) != g for word " + w;
    }
    return std::nullopt;
  });
  rep.failures.insert(rep.failures.end(), words.begin(), words.end());
  rep.cases += samples;
}

void commutators_suite(const Ring& r, std::uint64_t samples, std::uint64_t seed,
                       SuiteReport& rep) {
  require_field(r, "commutators");
  const std::uint32_t q = r.field_order();

  // Nondegeneracy: 1 + t^(2-tau) and 1 + t^tau vanish only at t = 1.
  std::int64_t zeros_two_minus_tau = 0, zeros_tau = 0;
  for (Element t : r.units()) {
    const bool one = t == r.one();
    if (r.add(r.one(), pow_two_minus_tau(r, t)).code == 0) {
      ++zeros_two_minus_tau;
      if (!one) rep.failures.push_back("1 + t^(2-tau) = 0 at t=" + elem(r, t));
    }
    if (r.add(r.one(), r.tits(t)).code == 0) {
      ++zeros_tau;
      if (!one) rep.failures.push_back("1 + t^tau = 0 at t=" + elem(r, t));
    }
  }
  rep.metrics["zeros_one_plus_t_two_minus_tau"] = zeros_two_minus_tau;
  rep.metrics["zeros_one_plus_t_tau"] = zeros_tau;

  if (q <= 2) {
    rep.status = SuiteStatus::kVacuous;
    rep.notes.push_back("no unit t != 1 exists; the identities are only used for F != F2");
    return;
  }

  const std::uint64_t domain = std::uint64_t{q} * q * (q - 1);
  auto check = [&r](std::uint32_t a_code, std::uint32_t b_code,
                       std::uint32_t t_code) -> Failure {
    const Element a{a_code}, b{b_code}, t{t_code};
    const Mat4 ht = h_matrix(r, t);
    const Mat4 c1 = commutator(x_plus_matrix(r, r.zero(), b), ht);
    const Mat4 e1 = x_plus_matrix(r, r.zero(), r.mul(b, r.add(r.one(), r.tits(t))));
    const std::string where =
        " at a=" + elem(r, a) + " b=" + elem(r, b) + " t=" + elem(r, t);
    if (!(c1 == e1)) return "[x+(0,b),h(t)] mismatch" + where;
    const Element k = pow_two_minus_tau(r, t);
    const Mat4 c2 = commutator(x_plus_matrix(r, a, r.zero()), ht);
    const Mat4 e2 = x_plus_matrix(r, r.mul(a, r.add(r.one(), k)),
                                  r.mul(r.mul(a, r.tits(a)), r.add(r.tits(t), k)));
    if (!(c2 == e2)) return "[x+(a,0),h(t)] mismatch" + where;
    return std::nullopt;
  };

  if (domain <= kExhaustiveLimit) {
    rep.cases = domain;
    rep.failures = run_cases(domain, [&](std::uint64_t i) {
      return check(static_cast<std::uint32_t>(i / (q * (q - 1))),
                   static_cast<std::uint32_t>((i / (q - 1)) % q),
                   static_cast<std::uint32_t>(i % (q - 1) + 1));
    });
  } else {
    rep.cases = samples;
    rep.failures = run_cases(samples, [&](std::uint64_t i) {
      auto rng = case_rng(seed, i);
      std::uniform_int_distribution<std::uint32_t> any(0, q - 1), unit(1, q - 1);
      const std::uint32_t a = any(rng), b = any(rng), t = unit(rng);
      return check(a, b, t);
    });
  }
}

void weyl_suite(const Ring& r, SuiteReport& rep) {
  const std::vector<Element> units = r.units();
  std::int64_t first = 0, second = 0, twisted = 0;
  for (Element t : units) {
    const Element a = pow_one_minus_tau(r, t);
    const Mat4 product = x_plus_matrix(r, a, r.invert(t)) *
                         x_minus_matrix(r, r.zero(), t) *
                         x_plus_matrix(r, a, r.zero());
    const Mat4 conj = conjugate(x_minus_matrix(r, r.zero(), t),
                                x_plus_matrix(r, a, r.zero()));
    const std::string at = " at t=" + elem(r, t);
    if (!(s_matrix(r) * h_matrix(r, t) == product)) {
      ++first;
      rep.failures.push_back("s h(t) != x+(t^(1-tau),t^-1) x-(0,t) x+(t^(1-tau),0)" + at);
    }
    if (!(product == conj)) {
      ++second;
      rep.failures.push_back("x+(..) x-(0,t) x+(..) != x-(0,t)^x+(t^(1-tau),0)" + at);
    }
    if (!(s_matrix(r) * h_matrix(r, r.tits(t)) == product)) {
      ++twisted;
      rep.failures.push_back("s h(t^tau) != x+(..) x-(0,t) x+(..)" + at);
    }
  }
  rep.cases = units.size();
  rep.metrics["first_form_failures"] = first;
  rep.metrics["second_form_failures"] = second;
  rep.metrics["twisted_form_failures"] = twisted;
  if (first > 0 && twisted == 0) {
    rep.notes.push_back(
        "the product x+(t^(1-tau),t^-1) x-(0,t) x+(t^(1-tau),0) equals s h(t^tau) "
        "for every unit; it equals s h(t) only where t^tau = t");
  }
}

void corefree_suite(const Ring& r, SuiteReport& rep) {
  require_field(r, "corefree");
  const Mat4 s = s_matrix(r);
  const Mat4 xm = x_minus_matrix(r, r.zero(), r.one());

  std::vector<Mat4> borel;
  GroupSet b_set(r), hs(r);
  for (Element t : r.units()) {
    hs.insert(canonical_key(h_matrix(r, t)));
    for (Element a : r.all_elements())
      for (Element b : r.all_elements()) {
        borel.push_back(h_matrix(r, t) * x_plus_matrix(r, a, b));
        b_set.insert(canonical_key(borel.back()));
      }
  }
  GroupSet b_s(r), b_x(r);
  for (const Mat4& g : borel) {
    b_s.insert(canonical_key(conjugate(g, s)));
    b_x.insert(canonical_key(conjugate(g, xm)));
  }

  std::int64_t b_cap_bs = 0, core = 0;
  bool identity_in_core = false;
  const CanonicalKey id = canonical_key(Mat4::identity(r));
  for (const CanonicalKey& k : b_set.keys()) {
    if (!b_s.keys().contains(k)) continue;
    ++b_cap_bs;
    if (!hs.keys().contains(k)) {
      rep.failures.push_back("B n B^s contains a non-diagonal element");
    }
    if (b_x.keys().contains(k)) {
      ++core;
      identity_in_core |= k == id;
    }
  }
  rep.metrics["borel_size"] = static_cast<std::int64_t>(b_set.size());
  rep.metrics["b_cap_bs_size"] = b_cap_bs;
  rep.metrics["intersection_size"] = core;
  if (b_cap_bs != static_cast<std::int64_t>(hs.size())) {
    rep.failures.push_back("|B n B^s| = " + std::to_string(b_cap_bs) +
                           " but |H| = " + std::to_string(hs.size()));
  }
  if (core != 1 || !identity_in_core) {
    rep.failures.push_back("B n B^s n B^x-(0,1) has " + std::to_string(core) +
                           " elements, expected only the identity");
  }

  // Entry formulas for g = x-(0,1) h(t) x+(a,b) x-(0,1).
  for (Element t : r.units()) {
    const Element k = pow_tau_minus_one(r, t);
    for (Element a : r.all_elements())
      for (Element b : r.all_elements()) {
        const Mat4 g = xm * h_matrix(r, t) * x_plus_matrix(r, a, b) * xm;
        const std::string at = " at t=" + elem(r, t) + " a=" + elem(r, a) + " b=" + elem(r, b);
        if (g.at(2, -2) != r.mul(k, r.tits(a))) rep.failures.push_back("g_{2,-2}" + at);
        if (g.at(2, -1) != r.mul(k, b)) rep.failures.push_back("g_{2,-1}" + at);
        if (a.code == 0 && b.code == 0 && g.at(-1, 1) != r.add(t, r.invert(t))) {
          rep.failures.push_back("g_{-1,1}" + at);
        }
      }
  }
  rep.cases = borel.size();
}

void perfectness_suite(const Ring& r, SuiteReport& rep) {
  require_field(r, "perfectness");
  const std::uint32_t q = r.field_order();
  if (q <= 2) {
    rep.status = SuiteStatus::kVacuous;
    rep.notes.push_back("no unit t != 1 exists over F2");
    return;
  }
  const Element t{2};  // any unit other than 1
  const Mat4 ht = h_matrix(r, t);
  const Element inv_tau = r.invert(r.add(r.one(), r.tits(t)));
  const Element inv_two = r.invert(r.add(r.one(), pow_two_minus_tau(r, t)));

  auto commutator_for_b = [&](Element d) {
    return commutator(x_plus_matrix(r, r.zero(), r.mul(d, inv_tau)), ht);
  };

  for (Element d : r.all_elements()) {
    ++rep.cases;
    if (!(commutator_for_b(d) == x_plus_matrix(r, r.zero(), d))) {
      rep.failures.push_back("[x+(0, d/(1+t^tau)), h(t)] != x+(0,d) at d=" + elem(r, d));
    }
  }
  for (Element c : r.all_elements()) {
    const Mat4 cc = commutator(x_plus_matrix(r, r.mul(c, inv_two), r.zero()), ht);
    const Element y = cc.at(2, -1);
    if (!(cc == x_plus_matrix(r, c, y))) {
      rep.failures.push_back("[x+(c/(1+t^(2-tau)),0), h(t)] is not x+(c,*) at c=" + elem(r, c));
      continue;
    }
    for (Element d : r.all_elements()) {
      ++rep.cases;
      // x+(c, y) x+(0, e) = x+(c, y + e).
      const Mat4 prod = cc * commutator_for_b(r.add(d, y));
      if (!(prod == x_plus_matrix(r, c, d))) {
        rep.failures.push_back("x+(c,d) not a product of two commutators at c=" +
                               elem(r, c) + " d=" + elem(r, d));
      }
    }
  }
}

void normalclosure_suite(const Ring& r, std::uint64_t samples, std::uint64_t seed,
                         SuiteReport& rep) {
  require_field(r, "normalclosure");
  const std::uint32_t q = r.field_order();
  if (q <= 2) {
    rep.status = SuiteStatus::kVacuous;
    rep.notes.push_back("Sz(2) is excluded from the simplicity statement");
    return;
  }
  const std::uint64_t order = cell_count(q);
  const Mat4 id = Mat4::identity(r);
  std::int64_t min_size = static_cast<std::int64_t>(order);
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto rng = case_rng(seed, i);
    BruhatForm f;
    do {
      f = random_form(r, rng);
    } while (recompose_matrix(r, f) == id);
    const GroupElement x = recompose(r, f);
    const GroupSet n = normal_closure(x, r, order);
    min_size = std::min<std::int64_t>(min_size, static_cast<std::int64_t>(n.size()));
    if (n.size() != order) {
      rep.failures.push_back("case " + std::to_string(i) + ": normal closure of " +
                             form_string(r, f) + " has " + std::to_string(n.size()) +
                             " elements");
    }
  }
  rep.cases = samples;
  rep.metrics["group_order"] = static_cast<std::int64_t>(order);
  rep.metrics["min_closure_size"] = min_size;
}

}  // namespace

std::string_view to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::kPass: return "pass";
    case SuiteStatus::kFail: return "fail";
    case SuiteStatus::kVacuous: return "vacuous";
  }
  return "unknown";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "closure", "roundtrip", "commutators", "weyl",
      "corefree", "perfectness", "normalclosure"};
  return names;
}

SuiteReport run_suite(std::string_view name, const Ring& ring,
                      std::uint64_t samples, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = std::string(name);
  rep.ring = &ring;

  if (name == "closure") {
    closure_suite(ring, samples, seed, rep);
  } else if (name == "roundtrip") {
    roundtrip_suite(ring, samples, seed, rep);
  } else if (name == "commutators") {
    commutators_suite(ring, samples, seed, rep);
  } else if (name == "weyl") {
    weyl_suite(ring, rep);
  } else if (name == "corefree") {
    corefree_suite(ring, rep);
  } else if (name == "perfectness") {
    perfectness_suite(ring, rep);
  } else if (name == "normalclosure") {
    normalclosure_suite(ring, samples, seed, rep);
  } else {
    throw UnknownName("unknown suite: " + std::string(name));
  }

  std::sort(rep.failures.begin(), rep.failures.end());
  if (!rep.failures.empty()) {
    rep.status = SuiteStatus::kFail;
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace suzuki
