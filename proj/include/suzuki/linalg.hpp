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

// Vectors and matrices over a Ring in the fixed bases
//
//   V:     e1, e2, e-2, e-1                       (positions 0..3)
//   ^2 V:  e1^e2, e1^e-2, e1^e-1, e2^e-2, e2^e-1, e-2^e-1   (positions 0..5)
//
// together with the exterior square g -> g^g, the projection rho: ^2V -> V
// that drops the e1^e-1 and e2^e-2 coordinates, its transpose rho_hat, and
// the entrywise Tits map.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "suzuki/error.hpp"
#include "suzuki/ring.hpp"

namespace suzuki {

// Signed basis index (1, 2, -2, -1) to storage position (0, 1, 2, 3).
constexpr std::size_t pos(int signed_index) {
  switch (signed_index) {
    case 1: return 0;
    case 2: return 1;
    case -2: return 2;
    case -1: return 3;
  }
  throw InvalidParameter("basis index must be one of 1, 2, -2, -1");
}

// Position pairs (i, j), i < j, labelling the ^2V basis in storage order.
inline constexpr std::array<std::pair<std::size_t, std::size_t>, 6>
    kWedgePairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <std::size_t N>
class Vec {
 public:
  explicit Vec(const Ring& ring) : ring_(&ring) {}
  Vec(const Ring& ring, const std::array<Element, N>& entries)
      : ring_(&ring), v_(entries) {}

  static Vec basis(const Ring& ring, std::size_t k) {
    Vec v(ring);
    v.v_.at(k) = ring.one();
    return v;
  }

  const Ring& ring() const { return *ring_; }
  Element operator[](std::size_t i) const { return v_[i]; }
  Element& operator[](std::size_t i) { return v_[i]; }
  const std::array<Element, N>& entries() const { return v_; }

  bool is_zero() const {
    for (Element x : v_) {
      if (x.code != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.ring_ == b.ring_ && a.v_ == b.v_;
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    if (a.ring_ != b.ring_) throw RingMismatch("vector addition across rings");
    Vec r(*a.ring_);
    for (std::size_t i = 0; i < N; ++i) r.v_[i] = a.ring_->add(a.v_[i], b.v_[i]);
    return r;
  }

 private:
  const Ring* ring_;
  std::array<Element, N> v_{};
};

using Vec4 = Vec<4>;
using Vec6 = Vec<6>;

template <std::size_t N>
class SquareMatrix {
 public:
  explicit SquareMatrix(const Ring& ring) : ring_(&ring) {}
  SquareMatrix(const Ring& ring, const std::array<Element, N * N>& row_major)
      : ring_(&ring), e_(row_major) {}

  static SquareMatrix identity(const Ring& ring) {
    SquareMatrix r(ring);
    for (std::size_t i = 0; i < N; ++i) r(i, i) = ring.one();
    return r;
  }

  static constexpr std::size_t size() { return N; }

  const Ring& ring() const { return *ring_; }
  Element operator()(std::size_t i, std::size_t j) const { return e_[i * N + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }
  // Entry addressed by signed basis indices, e.g. at(-1, 1).
  Element at(int i, int j) const
    requires(N == 4)
  {
    return (*this)(pos(i), pos(j));
  }
  const std::array<Element, N * N>& entries() const { return e_; }

  Vec<N> column(std::size_t j) const {
    Vec<N> c(*ring_);
    for (std::size_t i = 0; i < N; ++i) c[i] = (*this)(i, j);
    return c;
  }

  SquareMatrix transpose() const {
    SquareMatrix t(*ring_);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.ring_ == b.ring_ && a.e_ == b.e_;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.ring_ != b.ring_) {
      throw RingMismatch("matrix product across rings");
    }
    const Ring& r = *a.ring_;
    SquareMatrix out(r);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < N; ++k) {
          acc ^= r.mul(a(i, k), b(k, j)).code;
        }
        out(i, j) = Element{acc};
      }
    }
    return out;
  }

  friend Vec<N> operator*(const SquareMatrix& a, const Vec<N>& v) {
    if (a.ring_ != &v.ring()) {
      throw RingMismatch("matrix-vector product across rings");
    }
    const Ring& r = *a.ring_;
    Vec<N> out(r);
    for (std::size_t i = 0; i < N; ++i) {
      std::uint32_t acc = 0;
      for (std::size_t k = 0; k < N; ++k) acc ^= r.mul(a(i, k), v[k]).code;
      out[i] = Element{acc};
    }
    return out;
  }

 private:
  const Ring* ring_;
  std::array<Element, N * N> e_{};
};

using Mat4 = SquareMatrix<4>;
using Mat6 = SquareMatrix<6>;

// Entry ((i,j),(k,l)) is the 2x2 minor g_ik g_jl + g_il g_jk.
Mat6 wedge_square(const Mat4& g);

Vec4 rho(const Vec6& v);
Vec6 rho_hat(const Vec4& x);

template <std::size_t N>
Vec<N> tau_map(const Vec<N>& v) {
  Vec<N> r(v.ring());
  for (std::size_t i = 0; i < N; ++i) r[i] = v.ring().tits(v[i]);
  return r;
}

template <std::size_t N>
SquareMatrix<N> tau_map(const SquareMatrix<N>& g) {
  SquareMatrix<N> r(g.ring());
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = g.ring().tits(g(i, j));
  return r;
}

// Gram matrix of the symplectic form: all antidiagonal entries 1.
Mat4 symplectic_form(const Ring& ring);

bool is_symplectic(const Mat4& g);

// s g^t s; throws NotSymplectic unless is_symplectic(g).
Mat4 symplectic_inverse(const Mat4& g);

std::string to_string(const Mat4& g);

}  // namespace suzuki
