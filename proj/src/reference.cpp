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

#include "suzuki/reference.hpp"

#include <deque>

#include "suzuki/error.hpp"

namespace suzuki::reference {

GroupSet enumerate_all(const Ring& r) {
  GroupSet set(r);
  for_each_form(r, [&](const BruhatForm& f) {
    set.insert(canonical_key(recompose(r, f)));
  });
  return set;
}

StreamCount count_streaming(const Ring& r) {
  StreamCount c;
  for_each_form(r, [&](const BruhatForm& f) {
    ++c.forms;
    const Mat4 g = recompose_matrix(r, f);
    if (!is_member(g)) return;
    ++c.members;
    if (decompose(g) == f) ++c.round_trips;
  });
  return c;
}

Closure bfs_explore(std::span<const GroupElement> generators, std::size_t limit) {
  if (generators.empty()) throw InvalidParameter("empty generator set");
  const Ring& r = generators.front().ring();
  GroupSet set(r);
  std::deque<Mat4> queue;
  for (const GroupElement& g : generators) {
    if (set.insert(canonical_key(g))) {
      if (set.size() > limit) return {std::move(set), false};
      queue.push_back(g.matrix());
    }
  }
  while (!queue.empty()) {
    const Mat4 cur = queue.front();
    queue.pop_front();
    for (const GroupElement& g : generators) {
      const Mat4 next = cur * g.matrix();
      if (set.insert(canonical_key(next))) {
        if (set.size() > limit) return {std::move(set), false};
        queue.push_back(next);
      }
    }
  }
  return {std::move(set), true};
}

}  // namespace suzuki::reference
