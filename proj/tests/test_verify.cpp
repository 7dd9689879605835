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

#include <algorithm>

#include "suzuki/error.hpp"
#include "suzuki/verify.hpp"

namespace suzuki {

void PrintTo(SuiteStatus s, std::ostream* os) { *os << to_string(s); }

namespace {

const Ring& gf(int m) { return make_ring(RingKind::kGF2m, m); }
const Ring& dual8() { return make_ring(RingKind::kDual, 3); }

void expect_same(const SuiteReport& x, const SuiteReport& y) {
  EXPECT_EQ(x.suite, y.suite);
  EXPECT_EQ(x.ring, y.ring);
  EXPECT_EQ(x.cases, y.cases);
  EXPECT_EQ(x.failures, y.failures);
  EXPECT_EQ(x.status, y.status);
  EXPECT_EQ(x.metrics, y.metrics);
  EXPECT_EQ(x.notes, y.notes);
}

TEST(RunSuite, Deterministic) {
  for (const std::string name : {"closure", "roundtrip", "weyl", "normalclosure"}) {
    const Ring& r = name == "normalclosure" ? gf(3) : gf(5);
    expect_same(run_suite(name, r, 3, 7), run_suite(name, r, 3, 7));
  }
  expect_same(run_suite("closure", dual8(), 200, 1), run_suite("closure", dual8(), 200, 1));
}

TEST(RunSuite, UnknownSuite) { EXPECT_THROW(run_suite("nope", gf(3), 1, 1), UnknownName); }

TEST(RunSuite, FieldOnlySuitesRejectDual) {
  for (const std::string name :
       {"roundtrip", "commutators", "corefree", "perfectness", "normalclosure"}) {
    EXPECT_THROW(run_suite(name, dual8(), 1, 1), NotAField) << name;
  }
}

TEST(RunSuite, FailuresAreSorted) {
  const SuiteReport rep = run_suite("weyl", gf(5), 0, 0);
  EXPECT_TRUE(std::is_sorted(rep.failures.begin(), rep.failures.end()));
}

TEST(ClosureSuite, PassesOnEveryRing) {
  for (const Ring* r : {&gf(1), &gf(3), &gf(5), &dual8()}) {
    const SuiteReport rep = run_suite("closure", *r, 1000, 42);
    EXPECT_EQ(rep.status, SuiteStatus::kPass) << r->describe();
    EXPECT_EQ(rep.cases, 1000u);
  }
}

TEST(RoundtripSuite, ExhaustiveOnGf8) {
  const SuiteReport rep = run_suite("roundtrip", gf(3), 100, 1);
  EXPECT_EQ(rep.status, SuiteStatus::kPass);
  EXPECT_EQ(rep.cases, 29120u + 100u);
}

TEST(RoundtripSuite, SampledOnGf32) {
  const SuiteReport rep = run_suite("roundtrip", gf(5), 10000, 1);
  EXPECT_EQ(rep.status, SuiteStatus::kPass);
  EXPECT_EQ(rep.cases, 20000u);
}

TEST(CommutatorsSuite, Gf8) {
  const SuiteReport rep = run_suite("commutators", gf(3), 0, 0);
  EXPECT_EQ(rep.status, SuiteStatus::kPass);
  // One case per (a, b, t); both commutator forms are checked in it.
  EXPECT_EQ(rep.cases, 8u * 8u * 7u);
  EXPECT_EQ(rep.metrics.at("zeros_one_plus_t_two_minus_tau"), 1);
  EXPECT_EQ(rep.metrics.at("zeros_one_plus_t_tau"), 1);
}

TEST(CommutatorsSuite, F2IsVacuous) {
  const SuiteReport rep = run_suite("commutators", gf(1), 0, 0);
  EXPECT_EQ(rep.status, SuiteStatus::kVacuous);
  EXPECT_TRUE(rep.failures.empty());
  EXPECT_FALSE(rep.notes.empty());
}

TEST(CorefreeSuite, IntersectionIsTrivial) {
  const SuiteReport rep = run_suite("corefree", gf(3), 0, 0);
  EXPECT_EQ(rep.status, SuiteStatus::kPass);
  EXPECT_EQ(rep.metrics.at("borel_size"), 448);
  EXPECT_EQ(rep.metrics.at("b_cap_bs_size"), 7);
  EXPECT_EQ(rep.metrics.at("intersection_size"), 1);
}

TEST(PerfectnessSuite, Gf8AndF2) {
  EXPECT_EQ(run_suite("perfectness", gf(3), 0, 0).status, SuiteStatus::kPass);
  EXPECT_EQ(run_suite("perfectness", gf(5), 0, 0).status, SuiteStatus::kPass);
  EXPECT_EQ(run_suite("perfectness", gf(1), 0, 0).status, SuiteStatus::kVacuous);
}

TEST(NormalclosureSuite, Gf8) {
  const SuiteReport rep = run_suite("normalclosure", gf(3), 4, 9);
  EXPECT_EQ(rep.status, SuiteStatus::kPass);
  EXPECT_EQ(rep.metrics.at("min_closure_size"), 29120);
  EXPECT_EQ(run_suite("normalclosure", gf(1), 4, 9).status, SuiteStatus::kVacuous);
}

// The first form holds only at t = 1; the second and the
// s h(t^tau) reading hold everywhere.
TEST(WeylSuite, FailurePattern) {
  for (const Ring* r : {&gf(3), &gf(5), &dual8()}) {
    const SuiteReport rep = run_suite("weyl", *r, 0, 0);
    EXPECT_EQ(rep.cases, r->units().size());
    EXPECT_EQ(rep.metrics.at("first_form_failures"),
              static_cast<std::int64_t>(r->units().size()) - 1);
    EXPECT_EQ(rep.metrics.at("second_form_failures"), 0);
    EXPECT_EQ(rep.metrics.at("twisted_form_failures"), 0);
  }
  EXPECT_EQ(run_suite("weyl", gf(1), 0, 0).status, SuiteStatus::kPass);
}

TEST(RunSuite, AllSuitesPassOnGf8) {
  for (const std::string& name : suite_names()) {
    const SuiteReport rep = run_suite(name, gf(3), 5, 3);
    EXPECT_EQ(rep.status, SuiteStatus::kPass)
        << name << ": " << (rep.failures.empty() ? "" : rep.failures.front());
  }
}

TEST(RunSuite, ClosureAndWeylPassBeyondGf8) {
  for (const Ring* r : {&gf(5), &dual8()}) {
    EXPECT_EQ(run_suite("closure", *r, 500, 5).status, SuiteStatus::kPass) << r->describe();
    EXPECT_EQ(run_suite("weyl", *r, 0, 0).status, SuiteStatus::kPass) << r->describe();
  }
}

}  // namespace
}  // namespace suzuki
