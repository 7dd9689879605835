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

#include "suzuki/linalg.hpp"

#include <sstream>

namespace suzuki {

Mat6 wedge_square(const Mat4& g) {
  const Ring& r = g.ring();
  Mat6 w(r);
  for (std::size_t row = 0; row < 6; ++row) {
    const auto [i, j] = kWedgePairs[row];
    for (std::size_t col = 0; col < 6; ++col) {
      const auto [k, l] = kWedgePairs[col];
      w(row, col) = r.add(r.mul(g(i, k), g(j, l)), r.mul(g(i, l), g(j, k)));
    }
  }
  return w;
}

Vec4 rho(const Vec6& v) {
  return Vec4(v.ring(), {v[0], v[1], v[4], v[5]});
}

Vec6 rho_hat(const Vec4& x) {
  const Element z = x.ring().zero();
  return Vec6(x.ring(), {x[0], x[1], z, z, x[2], x[3]});
}

Mat4 symplectic_form(const Ring& ring) {
  Mat4 s(ring);
  for (std::size_t i = 0; i < 4; ++i) s(i, 3 - i) = ring.one();
  return s;
}

bool is_symplectic(const Mat4& g) {
  const Mat4 s = symplectic_form(g.ring());
  return g.transpose() * s * g == s;
}

Mat4 symplectic_inverse(const Mat4& g) {
  if (!is_symplectic(g)) {
    throw NotSymplectic("matrix is not symplectic:\n" + to_string(g));
  }
  const Mat4 s = symplectic_form(g.ring());
  return s * g.transpose() * s;
}

std::string to_string(const Mat4& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 4; ++i) {
    os << (i == 0 ? "[[" : " [");
    for (std::size_t j = 0; j < 4; ++j) {
      if (j) os << ", ";
      os << g(i, j).code;
    }
    os << (i == 3 ? "]]" : "]\n");
  }
  return os.str();
}

}  // namespace suzuki
