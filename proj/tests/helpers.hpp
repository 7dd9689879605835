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

// Random inputs shared by the unit tests.

#pragma once

#include <random>

#include "oracles.hpp"
#include "suzuki/group.hpp"
#include "suzuki/linalg.hpp"
#include "suzuki/ring.hpp"

namespace suzuki::testing {

inline Element random_element_code(const Ring& r, std::mt19937_64& rng) {
  return Element{static_cast<std::uint32_t>(rng() % r.size())};
}

inline Element random_unit(const Ring& r, std::mt19937_64& rng) {
  for (;;) {
    const Element x = random_element_code(r, rng);
    if (r.is_unit(x)) return x;
  }
}

inline Mat4 random_matrix(const Ring& r, std::mt19937_64& rng) {
  Mat4 g(r);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = random_element_code(r, rng);
  return g;
}

template <std::size_t N>
Vec<N> random_vec(const Ring& r, std::mt19937_64& rng) {
  Vec<N> v(r);
  for (std::size_t i = 0; i < N; ++i) v[i] = random_element_code(r, rng);
  return v;
}

// Product of `length` random x+(a,b), h(t), s factors.
inline Mat4 random_word(const Ring& r, std::mt19937_64& rng, int length = 5) {
  Mat4 g = Mat4::identity(r);
  for (int i = 0; i < length; ++i) {
    switch (rng() % 3) {
      case 0:
        g = g * x_plus_matrix(r, random_element_code(r, rng), random_element_code(r, rng));
        break;
      case 1:
        g = g * h_matrix(r, random_unit(r, rng));
        break;
      default:
        g = g * s_matrix(r);
    }
  }
  return g;
}

inline oracle::M4 raw(const Mat4& g) {
  oracle::M4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = g(i, j).code;
  return out;
}

}  // namespace suzuki::testing
