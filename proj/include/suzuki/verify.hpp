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

// Executable witness suites for the group structure:
//
//   closure        products and inverses of random generator words are members
//   roundtrip      Bruhat decompose/recompose are mutually inverse
//   commutators    [x+(0,b), h(t)] and [x+(a,0), h(t)] closed forms
//   weyl           the Weyl-element relation for s h(t)
//   corefree       B n B^s n B^(x-(0,1)) = 1 and the entry formulas behind it
//   perfectness    every x+(c, d) is a product of two commutators
//   normalclosure  normal closures of random non-identity elements are G
//
// A suite is exhaustive when its parameter domain has at most
// kExhaustiveLimit cases, and samples `samples` seeded cases otherwise.
// Reports are a pure function of (suite, ring, samples, seed) apart from
// elapsed_seconds.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "suzuki/ring.hpp"

namespace suzuki {

enum class SuiteStatus { kPass, kFail, kVacuous };

std::string_view to_string(SuiteStatus s);

struct SuiteReport {
  std::string suite;
  const Ring* ring = nullptr;
  std::uint64_t cases = 0;
  // Sorted; each entry carries the parameters needed to replay the case.
  std::vector<std::string> failures;
  SuiteStatus status = SuiteStatus::kPass;
  std::map<std::string, std::int64_t> metrics;
  std::vector<std::string> notes;
  double elapsed_seconds = 0;
};

inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

const std::vector<std::string>& suite_names();

// Throws UnknownName for unregistered suites and NotAField when a field-only
// suite is given a dual-number ring.
SuiteReport run_suite(std::string_view name, const Ring& ring,
                      std::uint64_t samples, std::uint64_t seed);

}  // namespace suzuki
