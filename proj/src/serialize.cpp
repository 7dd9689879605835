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

#include "suzuki/serialize.hpp"

#include "suzuki/error.hpp"

namespace suzuki {

namespace {

std::uint64_t as_code(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw InvalidParameter("expected a non-negative integer, got " + j.dump());
  }
  return j.get<std::uint64_t>();
}

Json pair_to_json(const Ring& r, std::pair<Element, Element> p) {
  return Json::array({element_to_json(r, p.first), element_to_json(r, p.second)});
}

std::pair<Element, Element> pair_from_json(const Ring& r, const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidParameter("expected a pair of elements, got " + j.dump());
  }
  return {element_from_json(r, j[0]), element_from_json(r, j[1])};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidParameter(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json ring_to_json(const Ring& ring) {
  return {{"kind", ring.is_field() ? "gf2m" : "dual"}, {"m", ring.m()}};
}

const Ring& ring_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  const Json& m = field(j, "m");
  if (!kind.is_string() || !m.is_number_integer()) {
    throw InvalidParameter("malformed ring spec: " + j.dump());
  }
  const std::string k = kind.get<std::string>();
  if (k != "gf2m" && k != "dual") {
    throw InvalidParameter("ring kind must be \"gf2m\" or \"dual\", got " + k);
  }
  return make_ring(k == "gf2m" ? RingKind::kGF2m : RingKind::kDual, m.get<int>());
}

Json element_to_json(const Ring& ring, Element x) {
  if (ring.is_field()) return x.code;
  const auto [a, b] = ring.parts(x);
  return Json::array({a, b});
}

Element element_from_json(const Ring& ring, const Json& j) {
  if (ring.is_field()) return ring.element(as_code(j));
  if (!j.is_array() || j.size() != 2) {
    throw InvalidParameter("dual number must be [a, b], got " + j.dump());
  }
  const std::uint64_t a = as_code(j[0]), b = as_code(j[1]);
  if (a >= ring.field_order() || b >= ring.field_order()) {
    throw InvalidParameter("dual number component out of range: " + j.dump());
  }
  return ring.dual(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
}

Json matrix_to_json(const Mat4& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < 4; ++j) row.push_back(element_to_json(g.ring(), g(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat4 matrix_from_json(const Ring& ring, const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw InvalidParameter("matrix must be a 4x4 nested array");
  }
  Mat4 g(ring);
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4) {
      throw InvalidParameter("matrix must be a 4x4 nested array");
    }
    for (std::size_t k = 0; k < 4; ++k) g(i, k) = element_from_json(ring, j[i][k]);
  }
  return g;
}

Json matrix_document(const Mat4& g) {
  return {{"ring", ring_to_json(g.ring())}, {"matrix", matrix_to_json(g)}};
}

Mat4 matrix_from_document(const Json& doc) {
  return matrix_from_json(ring_from_json(field(doc, "ring")), field(doc, "matrix"));
}

Json form_to_json(const Ring& ring, const BruhatForm& f) {
  const bool big = f.cell == BruhatForm::Cell::kBig;
  return {{"cell", big ? "big" : "unit"},
          {"u1", f.u1 ? pair_to_json(ring, *f.u1) : Json(nullptr)},
          {"t", element_to_json(ring, f.t)},
          {"u2", pair_to_json(ring, f.u2)}};
}

BruhatForm form_from_json(const Ring& ring, const Json& j) {
  const Json& cell = field(j, "cell");
  if (!cell.is_string() || (cell != "unit" && cell != "big")) {
    throw InvalidParameter("cell must be \"unit\" or \"big\"");
  }
  BruhatForm f;
  f.cell = cell == "big" ? BruhatForm::Cell::kBig : BruhatForm::Cell::kUnit;
  const Json& u1 = field(j, "u1");
  if (!u1.is_null()) f.u1 = pair_from_json(ring, u1);
  if ((f.cell == BruhatForm::Cell::kBig) != f.u1.has_value()) {
    throw InvalidParameter("u1 must be present exactly for the big cell");
  }
  f.t = element_from_json(ring, field(j, "t"));
  f.u2 = pair_from_json(ring, field(j, "u2"));
  return f;
}

Json report_to_json(const SuiteReport& r) {
  Json metrics = Json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = v;
  return {{"suite", r.suite},
          {"ring", r.ring ? ring_to_json(*r.ring) : Json(nullptr)},
          {"cases", r.cases},
          {"failures", r.failures},
          {"status", std::string(to_string(r.status))},
          {"metrics", metrics},
          {"notes", r.notes}};
}

Json identity_result_to_json(const symbolic::IdentityResult& r) {
  Json j = {{"identity", r.name}, {"status", r.holds ? "pass" : "fail"}};
  if (!r.holds) {
    j["entry"] = r.entry;
    j["difference"] = r.difference;
  }
  return j;
}

}  // namespace suzuki
