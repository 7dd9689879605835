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

#include "suzuki/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <string>

#include "suzuki/error.hpp"

namespace suzuki {

namespace {

void require_enumerable(const Ring& ring) {
  if (!ring.is_field()) {
    throw NotAField("enumeration needs a field, got " + ring.describe());
  }
  if (ring.field_order() > kMaxEnumerationOrder) {
    throw InvalidParameter("enumeration size guard: q = " +
                           std::to_string(ring.field_order()) + " exceeds " +
                           std::to_string(kMaxEnumerationOrder));
  }
}

// h(t) x_+(a, b) for every unit t and all a, b, indexed
// ((t - 1) q + a) q + b. Shared by both cells.
std::vector<Mat4> build_tails(const Ring& r) {
  const std::int64_t q = r.field_order();
  const std::int64_t n = (q - 1) * q * q;
  std::vector<Mat4> tails(static_cast<std::size_t>(n), Mat4(r));
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < n; ++idx) {
    const auto t = static_cast<std::uint32_t>(idx / (q * q) + 1);
    const auto a = static_cast<std::uint32_t>((idx / q) % q);
    const auto b = static_cast<std::uint32_t>(idx % q);
    tails[idx] = h_matrix(r, Element{t}) * x_plus_matrix(r, Element{a}, Element{b});
  }
  return tails;
}

BruhatForm form_at(std::int64_t idx, std::uint32_t q) {
  const auto t = static_cast<std::uint32_t>(idx / (q * q) + 1);
  const auto a = static_cast<std::uint32_t>((idx / q) % q);
  const auto b = static_cast<std::uint32_t>(idx % q);
  return BruhatForm{BruhatForm::Cell::kUnit, std::nullopt, Element{t},
                    {Element{a}, Element{b}}};
}

// x_+(a1, b1)^-1 s for the big cell prefix (a1, b1).
Mat4 big_head(const Ring& r, std::uint32_t a1, std::uint32_t b1) {
  const Element a{a1}, b{b1};
  return x_plus_matrix(r, a, r.add(b, r.mul(a, r.tits(a)))) * s_matrix(r);
}

}  // namespace

std::uint64_t cell_count(std::uint64_t q) {
  int m = 0;
  while ((std::uint64_t{1} << m) < q && m < 63) ++m;
  if (q < 2 || (std::uint64_t{1} << m) != q || m % 2 == 0) {
    throw InvalidParameter("q must be 2^m with m odd, got " + std::to_string(q));
  }
  if (m > 15) throw InvalidParameter("q too large for a 64-bit count");
  const std::uint64_t q2 = q * q;
  return q2 * (q - 1) + q2 * (q - 1) * q2;
}

void for_each_form(const Ring& r,
                   const std::function<void(const BruhatForm&)>& visit) {
  require_enumerable(r);
  const std::uint32_t q = r.field_order();
  for (std::uint32_t t = 1; t < q; ++t)
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        visit({BruhatForm::Cell::kUnit, std::nullopt, Element{t},
               {Element{a}, Element{b}}});
  for (std::uint32_t a1 = 0; a1 < q; ++a1)
    for (std::uint32_t b1 = 0; b1 < q; ++b1)
      for (std::uint32_t t = 1; t < q; ++t)
        for (std::uint32_t a = 0; a < q; ++a)
          for (std::uint32_t b = 0; b < q; ++b)
            visit({BruhatForm::Cell::kBig, std::pair{Element{a1}, Element{b1}},
                   Element{t}, {Element{a}, Element{b}}});
}

GroupSet enumerate_all(const Ring& r, std::uint64_t set_limit) {
  require_enumerable(r);
  const std::uint32_t q = r.field_order();
  const std::uint64_t expected = cell_count(q);
  if (expected > set_limit) {
    throw LimitExceeded("Sz(" + std::to_string(q) + ") has " +
                        std::to_string(expected) +
                        " elements, above the set limit; use count_streaming");
  }
  const std::vector<Mat4> tails = build_tails(r);
  const auto n_tails = static_cast<std::int64_t>(tails.size());
  const std::int64_t n_heads = std::int64_t{q} * q;

  // One key block per unit-cell sweep plus one per big-cell head.
  std::vector<std::vector<CanonicalKey>> blocks(static_cast<std::size_t>(n_heads) + 1);
  blocks[0].reserve(tails.size());
  for (const Mat4& g : tails) blocks[0].push_back(canonical_key(g));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < n_heads; ++p) {
    const Mat4 head = big_head(r, static_cast<std::uint32_t>(p / q),
                               static_cast<std::uint32_t>(p % q));
    auto& out = blocks[static_cast<std::size_t>(p) + 1];
    out.reserve(tails.size());
    for (std::int64_t i = 0; i < n_tails; ++i) {
      out.push_back(canonical_key(head * tails[i]));
    }
  }

  GroupSet set(r);
  set.reserve(expected);
  for (const auto& block : blocks) {
    for (const CanonicalKey& k : block) set.insert(k);
  }
  return set;
}

StreamCount count_streaming(const Ring& r) {
  require_enumerable(r);
  const std::uint32_t q = r.field_order();
  const std::vector<Mat4> tails = build_tails(r);
  const auto n_tails = static_cast<std::int64_t>(tails.size());
  const std::int64_t n_heads = std::int64_t{q} * q;

  std::uint64_t forms = 0, members = 0, trips = 0;

#pragma omp parallel for schedule(static) reduction(+ : forms, members, trips)
  for (std::int64_t i = 0; i < n_tails; ++i) {
    ++forms;
    if (!is_member_fast(tails[i])) continue;
    ++members;
    if (decompose_member(tails[i]) == form_at(i, q)) ++trips;
  }

#pragma omp parallel for schedule(dynamic) reduction(+ : forms, members, trips)
  for (std::int64_t p = 0; p < n_heads; ++p) {
    const auto a1 = static_cast<std::uint32_t>(p / q);
    const auto b1 = static_cast<std::uint32_t>(p % q);
    const Mat4 head = big_head(r, a1, b1);
    for (std::int64_t i = 0; i < n_tails; ++i) {
      ++forms;
      const Mat4 g = head * tails[i];
      if (!is_member_fast(g)) continue;
      ++members;
      BruhatForm expected = form_at(i, q);
      expected.cell = BruhatForm::Cell::kBig;
      expected.u1 = std::pair{Element{a1}, Element{b1}};
      if (decompose_member(g) == expected) ++trips;
    }
  }
  return {forms, members, trips};
}

void spill_keys(const Ring& r, std::ostream& out) {
  std::vector<std::uint8_t> buf(key_record_bytes(r));
  for_each_form(r, [&](const BruhatForm& f) {
    write_key_record(r, canonical_key(recompose_matrix(r, f)), buf);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
  });
}

Closure bfs_explore(std::span<const GroupElement> generators, std::size_t limit) {
  if (generators.empty()) throw InvalidParameter("empty generator set");
  const Ring& r = generators.front().ring();
  std::vector<Mat4> gens;
  for (const GroupElement& g : generators) {
    if (!(g.ring() == r)) throw RingMismatch("generators over different rings");
    gens.push_back(g.matrix());
  }

  GroupSet set(r);
  std::vector<Mat4> frontier;
  for (const Mat4& g : gens) {
    if (set.insert(canonical_key(g))) {
      if (set.size() > limit) return {std::move(set), false};
      frontier.push_back(g);
    }
  }

  // Level-synchronous: products of a frontier block are computed in
  // parallel, then merged serially in index order so the next frontier is
  // deterministic.
  constexpr std::size_t kBlock = 2048;
  const auto n_gens = static_cast<std::int64_t>(gens.size());
  while (!frontier.empty()) {
    std::vector<Mat4> next;
    for (std::size_t start = 0; start < frontier.size(); start += kBlock) {
      const std::size_t stop = std::min(frontier.size(), start + kBlock);
      const auto n = static_cast<std::int64_t>((stop - start) * gens.size());
      std::vector<Mat4> products(static_cast<std::size_t>(n), Mat4(r));
      std::vector<CanonicalKey> keys(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) {
        products[i] = frontier[start + static_cast<std::size_t>(i / n_gens)] *
                      gens[static_cast<std::size_t>(i % n_gens)];
        keys[i] = canonical_key(products[i]);
      }
      for (std::size_t i = 0; i < products.size(); ++i) {
        if (set.insert(keys[i])) {
          if (set.size() > limit) return {std::move(set), false};
          next.push_back(products[i]);
        }
      }
    }
    frontier = std::move(next);
  }
  return {std::move(set), true};
}

GroupSet bfs_closure(std::span<const GroupElement> generators, std::size_t limit) {
  for (const GroupElement& g : generators) {
    if (!g.certified()) throw NotAMember("bfs_closure needs certified generators");
  }
  Closure c = bfs_explore(generators, limit);
  if (!c.complete) {
    throw LimitExceeded("closure exceeds " + std::to_string(limit) + " elements");
  }
  return std::move(c.set);
}

std::vector<GroupElement> standard_generators(const Ring& r) {
  std::vector<GroupElement> gens;
  for (Element a : r.all_elements())
    for (Element b : r.all_elements()) gens.push_back(x_plus(r, a, b));
  gens.push_back(s_element(r));
  return gens;
}

GroupSet normal_closure(const GroupElement& x, const Ring& r, std::size_t limit) {
  if (!r.is_field()) throw NotAField("normal closure needs a field");
  if (r.field_order() > 8) {
    throw InvalidParameter("normal closure is limited to q <= 8");
  }
  if (!(x.ring() == r)) throw RingMismatch("element and ring differ");
  if (!x.certified()) throw NotAMember("normal closure needs a certified element");

  const std::vector<GroupElement> conjugators = standard_generators(r);
  std::vector<GroupElement> normal_gens{x};
  for (;;) {
    Closure c = bfs_explore(normal_gens, limit);
    if (!c.complete) {
      throw LimitExceeded("normal closure exceeds " + std::to_string(limit));
    }
    // The closure is normal iff every conjugate of every generator is in it.
    std::optional<Mat4> missing;
    for (const GroupElement& y : normal_gens) {
      for (const GroupElement& g : conjugators) {
        const Mat4 conj = conjugate(y.matrix(), g.matrix());
        if (!c.set.contains(conj)) {
          missing = conj;
          break;
        }
      }
      if (missing) break;
    }
    if (!missing) return std::move(c.set);
    normal_gens.push_back(GroupElement::uncertified(*missing));
  }
}

BruhatForm random_form(const Ring& r, std::mt19937_64& rng) {
  require_enumerable(r);
  const std::uint64_t q = r.field_order();
  std::uniform_int_distribution<std::uint64_t> cell(0, q * q);
  std::uniform_int_distribution<std::uint32_t> any(0, static_cast<std::uint32_t>(q - 1));
  std::uniform_int_distribution<std::uint32_t> unit(1, static_cast<std::uint32_t>(q - 1));
  // |B| / |G| = 1 / (q^2 + 1).
  if (cell(rng) == 0) {
    const Element t{unit(rng)};
    const Element a{any(rng)}, b{any(rng)};
    return {BruhatForm::Cell::kUnit, std::nullopt, t, {a, b}};
  }
  const Element a1{any(rng)}, b1{any(rng)};
  const Element t{unit(rng)};
  const Element a{any(rng)}, b{any(rng)};
  return {BruhatForm::Cell::kBig, std::pair{a1, b1}, t, {a, b}};
}

GroupElement random_element(const Ring& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return recompose(r, random_form(r, rng));
}

}  // namespace suzuki
