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

// JSON interchange formats.
//
//   ring       {"kind": "gf2m" | "dual", "m": int}
//   element    int (field) | [a, b] (dual number a + b e)
//   matrix     [[e, e, e, e], x4] row-major
//   document   {"ring": ring, "matrix": matrix}
//   form       {"cell": "unit" | "big", "u1": [e, e] | null, "t": e, "u2": [e, e]}
//   report     {"suite", "ring", "cases", "failures", "status", "metrics", "notes"}
//
// Every *_from_json throws InvalidParameter on malformed input.

#pragma once

#include <json.hpp>

#include "suzuki/bruhat.hpp"
#include "suzuki/linalg.hpp"
#include "suzuki/ring.hpp"
#include "suzuki/symbolic.hpp"
#include "suzuki/verify.hpp"

namespace suzuki {

using Json = nlohmann::json;

Json ring_to_json(const Ring& ring);
const Ring& ring_from_json(const Json& j);

Json element_to_json(const Ring& ring, Element x);
Element element_from_json(const Ring& ring, const Json& j);

Json matrix_to_json(const Mat4& g);
Mat4 matrix_from_json(const Ring& ring, const Json& j);

Json matrix_document(const Mat4& g);
Mat4 matrix_from_document(const Json& doc);

Json form_to_json(const Ring& ring, const BruhatForm& f);
BruhatForm form_from_json(const Ring& ring, const Json& j);

Json report_to_json(const SuiteReport& r);
Json identity_result_to_json(const symbolic::IdentityResult& r);

}  // namespace suzuki
