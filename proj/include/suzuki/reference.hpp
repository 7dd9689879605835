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

// Straightforward single-threaded versions of the enumeration kernels. They
// call the public per-element API (recompose, is_member, decompose) with no
// precomputation, and serve as the oracle for the parallel kernels.

#pragma once

#include <span>

#include "suzuki/enumerate.hpp"

namespace suzuki::reference {

GroupSet enumerate_all(const Ring& ring);
StreamCount count_streaming(const Ring& ring);
Closure bfs_explore(std::span<const GroupElement> generators, std::size_t limit);

}  // namespace suzuki::reference
