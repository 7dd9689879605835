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

#include <map>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "suzuki/enumerate.hpp"
#include "suzuki/error.hpp"
#include "suzuki/reference.hpp"

namespace suzuki {
namespace {

const Ring& gf(int m) { return make_ring(RingKind::kGF2m, m); }
const Ring& dual(int m) { return make_ring(RingKind::kDual, m); }

TEST(CellCount, Examples) {
  EXPECT_EQ(cell_count(2), 20u);
  EXPECT_EQ(cell_count(8), 29120u);
  EXPECT_EQ(cell_count(32), 32537600u);
  for (std::uint64_t q : {2, 8, 32, 128}) {
    EXPECT_EQ(cell_count(q), q * q * (q - 1) + q * q * (q - 1) * q * q);
  }
}

TEST(CellCount, RejectsBadOrders) {
  for (std::uint64_t q : {0, 1, 3, 4, 16, 24}) EXPECT_THROW(cell_count(q), InvalidParameter) << q;
}

TEST(ForEachForm, OrderAndCount) {
  const Ring& r = gf(3);
  std::vector<BruhatForm> forms;
  for_each_form(r, [&](const BruhatForm& f) { forms.push_back(f); });
  ASSERT_EQ(forms.size(), 29120u);
  const std::size_t unit = 64 * 7;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    ASSERT_EQ(forms[i].cell == BruhatForm::Cell::kUnit, i < unit);
  }
  EXPECT_EQ(forms.front().t, r.one());
  EXPECT_EQ(forms.front().u2, std::pair(r.zero(), r.zero()));
  EXPECT_EQ(forms[unit].u1, std::pair(r.zero(), r.zero()));
  EXPECT_EQ(forms.back().u1, std::pair(Element{7}, Element{7}));
  EXPECT_EQ(forms.back().t, Element{7});
  auto tuple = [](const BruhatForm& f) {
    return std::array<std::uint32_t, 5>{f.u1 ? f.u1->first.code : 0, f.u1 ? f.u1->second.code : 0,
                                        f.t.code, f.u2.first.code, f.u2.second.code};
  };
  for (std::size_t i = 1; i < forms.size(); ++i) {
    if (i == unit) continue;
    ASSERT_LT(tuple(forms[i - 1]), tuple(forms[i]));
  }
}

TEST(EnumerateAll, F2) {
  const GroupSet g = enumerate_all(gf(1));
  EXPECT_EQ(g.size(), 20u);
  for (const CanonicalKey& k : g.keys()) EXPECT_TRUE(is_member(matrix_from_key(gf(1), k)));
}

TEST(EnumerateAll, Gf8) { EXPECT_EQ(enumerate_all(gf(3)).size(), 29120u); }

TEST(EnumerateAll, MatchesReference) {
  for (const Ring* r : {&gf(1), &gf(3)}) EXPECT_EQ(enumerate_all(*r), reference::enumerate_all(*r));
}

TEST(EnumerateAll, Rejections) {
  EXPECT_THROW(enumerate_all(dual(3)), NotAField);
  EXPECT_THROW(enumerate_all(gf(7)), InvalidParameter);
  EXPECT_THROW(enumerate_all(gf(5), 1000), LimitExceeded);
}

TEST(CountStreaming, CertifiedCounts) {
  for (const Ring* r : {&gf(1), &gf(3)}) {
    const StreamCount c = count_streaming(*r);
    EXPECT_TRUE(c.certified());
    EXPECT_EQ(c.forms, cell_count(r->field_order()));
    EXPECT_EQ(c, reference::count_streaming(*r));
  }
}

TEST(BfsClosure, IdentityOnly) {
  const Ring& r = gf(3);
  const std::vector<GroupElement> gens{*GroupElement::certify(Mat4::identity(r))};
  const GroupSet g = bfs_closure(gens, 10);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.contains(Mat4::identity(r)));
}

TEST(BfsClosure, F2) {
  const GroupSet g = bfs_closure(standard_generators(gf(1)), 100);
  EXPECT_EQ(g.size(), 20u);
  EXPECT_EQ(g, enumerate_all(gf(1)));
}

TEST(BfsClosure, Gf8EqualsEnumeration) {
  const GroupSet g = bfs_closure(standard_generators(gf(3)), 100000);
  EXPECT_EQ(g.size(), 29120u);
  EXPECT_EQ(g, enumerate_all(gf(3)));
}

TEST(BfsClosure, LimitExceeded) {
  EXPECT_THROW(bfs_closure(standard_generators(gf(3)), 1000), LimitExceeded);
}

TEST(BfsClosure, RequiresCertifiedGenerators) {
  const std::vector<GroupElement> gens{GroupElement::uncertified(s_matrix(gf(3)))};
  EXPECT_THROW(bfs_closure(gens, 10), NotAMember);
}

TEST(BfsExplore, MatchesReference) {
  for (const Ring* r : {&gf(1), &gf(3), &dual(1)}) {
    const auto gens = standard_generators(*r);
    const Closure par = bfs_explore(gens, 100000);
    const Closure ref = reference::bfs_explore(gens, 100000);
    EXPECT_EQ(par.complete, ref.complete);
    EXPECT_EQ(par.set, ref.set);
  }
}

TEST(BfsExplore, DualClosureStaysInGroup) {
  {
    const Ring& r = dual(1);
    const Closure c = bfs_explore(standard_generators(r), 100000);
    EXPECT_TRUE(c.complete);
    for (const CanonicalKey& k : c.set.keys()) ASSERT_TRUE(is_member(matrix_from_key(r, k)));
    RecordProperty("dual_f2_closure_size", std::to_string(c.set.size()));
  }
  // Over GF(8)[e] the full generating set is 4097 matrices; a handful of
  // root elements and s are enough to get far from the field points.
  const Ring& r = dual(3);
  const Element one = r.one(), eps = r.dual(0, 1), x = r.dual(2, 0), z = r.zero();
  std::vector<GroupElement> gens{x_plus(r, one, z), x_plus(r, eps, z), x_plus(r, x, z),
                                 x_plus(r, z, one), x_plus(r, z, eps), s_element(r)};
  const Closure c = bfs_explore(gens, 20000);
  EXPECT_GE(c.set.size(), 20000u);
  for (const CanonicalKey& k : c.set.keys()) ASSERT_TRUE(is_member(matrix_from_key(r, k)));
}

TEST(NormalClosure, Identity) {
  const Ring& r = gf(3);
  const GroupSet g = normal_closure(*GroupElement::certify(Mat4::identity(r)), r, 100000);
  EXPECT_EQ(g.size(), 1u);
}

TEST(NormalClosure, RootElementGeneratesSz8) {
  const Ring& r = gf(3);
  EXPECT_EQ(normal_closure(x_plus(r, r.one(), r.zero()), r, 100000).size(), 29120u);
}

TEST(NormalClosure, RandomElementsGenerateSz8) {
  const Ring& r = gf(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GroupElement x = random_element(r, seed);
    if (x.matrix() == Mat4::identity(r)) continue;
    EXPECT_EQ(normal_closure(x, r, 100000).size(), 29120u) << seed;
  }
}

// Sz(2) = C5 : C4 is not simple. Its normal subgroups are C5 < D10 < G, so
// the 4 elements of order 5 have closure C5, the 5 involutions D10, and the
// 10 elements of order 4 everything.
TEST(NormalClosure, Sz2IsNotSimple) {
  const Ring& r = gf(1);
  std::map<std::size_t, int> sizes;
  const GroupSet all = enumerate_all(r);
  for (const CanonicalKey& k : all.keys()) {
    const Mat4 g = matrix_from_key(r, k);
    if (g == Mat4::identity(r)) continue;
    ++sizes[normal_closure(*GroupElement::certify(g), r, 100).size()];
  }
  EXPECT_EQ(sizes, (std::map<std::size_t, int>{{5, 4}, {10, 5}, {20, 10}}));
}

TEST(NormalClosure, Rejections) {
  EXPECT_THROW(normal_closure(s_element(gf(5)), gf(5), 100), InvalidParameter);
  EXPECT_THROW(normal_closure(s_element(dual(3)), dual(3), 100), NotAField);
  EXPECT_THROW(normal_closure(x_plus(gf(3), Element{1}, Element{0}), gf(3), 100), LimitExceeded);
}

TEST(RandomElement, Deterministic) {
  const Ring& r = gf(5);
  EXPECT_EQ(random_element(r, 99), random_element(r, 99));
  EXPECT_NE(random_element(r, 99), random_element(r, 100));
  EXPECT_TRUE(random_element(r, 99).certified());
}

TEST(RandomElement, UniformOverSz2) {
  const Ring& r = gf(1);
  std::map<CanonicalKey, int> freq;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const GroupElement g = random_element(r, static_cast<std::uint64_t>(i));
    ASSERT_TRUE(is_member(g.matrix()));
    ++freq[canonical_key(g)];
  }
  ASSERT_EQ(freq.size(), 20u);
  double chi2 = 0;
  for (const auto& [k, c] : freq) {
    EXPECT_NEAR(static_cast<double>(c) / n, 0.05, 0.01);
    chi2 += (c - n / 20.0) * (c - n / 20.0) / (n / 20.0);
  }
  // 19 degrees of freedom; 43.8 is the 0.999 quantile.
  EXPECT_LT(chi2, 43.8);
}

TEST(RandomElement, RejectsDual) { EXPECT_THROW(random_element(dual(3), 1), NotAField); }

TEST(SpillKeys, RecordsMatchEnumeration) {
  const Ring& r = gf(3);
  std::ostringstream out;
  spill_keys(r, out);
  const std::string bytes = out.str();
  const std::size_t w = key_record_bytes(r);
  ASSERT_EQ(bytes.size(), 29120u * w);
  GroupSet read(r);
  for (std::size_t off = 0; off < bytes.size(); off += w) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(bytes.data() + off);
    read.insert(read_key_record(r, std::span<const std::uint8_t>(p, w)));
  }
  EXPECT_EQ(read, enumerate_all(r));
}

}  // namespace
}  // namespace suzuki
