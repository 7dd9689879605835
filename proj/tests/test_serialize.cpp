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

#include "helpers.hpp"
#include "suzuki/error.hpp"
#include "suzuki/serialize.hpp"

namespace suzuki {
namespace {

const Ring& gf(int m) { return make_ring(RingKind::kGF2m, m); }
const Ring& dual8() { return make_ring(RingKind::kDual, 3); }

TEST(RingJson, RoundTrip) {
  EXPECT_EQ(ring_to_json(gf(3)), Json::parse(R"({"kind":"gf2m","m":3})"));
  EXPECT_EQ(ring_to_json(dual8()), Json::parse(R"({"kind":"dual","m":3})"));
  for (const Ring* r : {&gf(1), &gf(13), &dual8()}) EXPECT_EQ(&ring_from_json(ring_to_json(*r)), r);
}

TEST(RingJson, Malformed) {
  for (const char* text : {R"({"kind":"gf2m"})", R"({"kind":"gf3","m":3})",
                           R"({"kind":"gf2m","m":4})", R"({"kind":1,"m":3})", "[]"}) {
    EXPECT_THROW(ring_from_json(Json::parse(text)), InvalidParameter) << text;
  }
}

TEST(ElementJson, FieldAndDual) {
  EXPECT_EQ(element_to_json(gf(3), Element{6}), Json(6));
  EXPECT_EQ(element_from_json(gf(3), Json(6)), Element{6});
  const Ring& d = dual8();
  EXPECT_EQ(element_to_json(d, d.dual(2, 5)), Json::parse("[2,5]"));
  EXPECT_EQ(element_from_json(d, Json::parse("[2,5]")), d.dual(2, 5));
}

TEST(ElementJson, Malformed) {
  EXPECT_THROW(element_from_json(gf(3), Json(8)), InvalidParameter);
  EXPECT_THROW(element_from_json(gf(3), Json(-1)), InvalidParameter);
  EXPECT_THROW(element_from_json(gf(3), Json("1")), InvalidParameter);
  EXPECT_THROW(element_from_json(dual8(), Json(1)), InvalidParameter);
  EXPECT_THROW(element_from_json(dual8(), Json::parse("[1,8]")), InvalidParameter);
  EXPECT_THROW(element_from_json(dual8(), Json::parse("[1,2,3]")), InvalidParameter);
}

TEST(MatrixJson, DocumentRoundTrip) {
  std::mt19937_64 rng(24);
  for (const Ring* r : {&gf(3), &gf(5), &dual8()}) {
    const Mat4 g = testing::random_matrix(*r, rng);
    const Json doc = matrix_document(g);
    EXPECT_EQ(matrix_from_document(Json::parse(doc.dump())), g);
  }
  EXPECT_EQ(matrix_to_json(Mat4::identity(gf(3))),
            Json::parse("[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"));
}

TEST(MatrixJson, Malformed) {
  EXPECT_THROW(matrix_from_json(gf(3), Json::parse("[[1,0,0,0]]")), InvalidParameter);
  EXPECT_THROW(matrix_from_json(gf(3), Json::parse("[[1,0,0],[0,1,0],[0,0,1],[0,0,0]]")),
               InvalidParameter);
  EXPECT_THROW(matrix_from_document(Json::parse(R"({"matrix":[]})")), InvalidParameter);
}

TEST(FormJson, RoundTrip) {
  const Ring& r = gf(3);
  const BruhatForm unit{BruhatForm::Cell::kUnit, std::nullopt, Element{3}, {Element{1}, Element{2}}};
  const BruhatForm big{BruhatForm::Cell::kBig, std::pair{Element{4}, Element{5}}, Element{6},
                       {Element{7}, Element{0}}};
  EXPECT_EQ(form_to_json(r, unit),
            Json::parse(R"({"cell":"unit","u1":null,"t":3,"u2":[1,2]})"));
  EXPECT_EQ(form_from_json(r, form_to_json(r, unit)), unit);
  EXPECT_EQ(form_from_json(r, form_to_json(r, big)), big);
}

TEST(FormJson, Malformed) {
  const Ring& r = gf(3);
  EXPECT_THROW(form_from_json(r, Json::parse(R"({"cell":"big","u1":null,"t":3,"u2":[1,2]})")),
               InvalidParameter);
  EXPECT_THROW(form_from_json(r, Json::parse(R"({"cell":"mid","u1":null,"t":3,"u2":[1,2]})")),
               InvalidParameter);
  EXPECT_THROW(form_from_json(r, Json::parse(R"({"cell":"unit","u1":null,"u2":[1,2]})")),
               InvalidParameter);
}

TEST(ReportJson, Keys) {
  SuiteReport rep;
  rep.suite = "weyl";
  rep.ring = &gf(3);
  rep.cases = 7;
  rep.failures = {"x"};
  rep.status = SuiteStatus::kFail;
  rep.metrics["k"] = 3;
  const Json j = report_to_json(rep);
  EXPECT_EQ(j.at("suite"), "weyl");
  EXPECT_EQ(j.at("ring"), ring_to_json(gf(3)));
  EXPECT_EQ(j.at("cases"), 7);
  EXPECT_EQ(j.at("failures"), Json::parse(R"(["x"])"));
  EXPECT_EQ(j.at("status"), "fail");
  EXPECT_EQ(j.at("metrics").at("k"), 3);
  EXPECT_FALSE(j.contains("elapsed_seconds"));
}

}  // namespace
}  // namespace suzuki
