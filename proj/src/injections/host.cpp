// Copyright 2026 The hkstar Authors
//
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

#include "internal.hpp"

namespace hkstar {
namespace detail {

bool is_ancestor_or_self(const Forest& f, VertexId ancestor, VertexId x) {
  if (f.component(ancestor) != f.component(x)) return false;
  const int target = f.depth(ancestor);
  while (x != kNoVertex && f.depth(x) > target) x = f.parent(x);
  return x == ancestor;
}

int tree_distance(const Forest& f, VertexId a, VertexId b) {
  int dist = 0;
  while (f.depth(a) > f.depth(b)) a = f.parent(a), ++dist;
  while (f.depth(b) > f.depth(a)) b = f.parent(b), ++dist;
  while (a != b) a = f.parent(a), b = f.parent(b), dist += 2;
  return dist;
}

bool on_leftmost_path(const Forest& f, VertexId x) {
  for (VertexId c = x; f.parent(c) != kNoVertex; c = f.parent(c))
    if (f.children(f.parent(c)).front() != c) return false;
  return true;
}

}  // namespace detail

PathPosition leftmost_path_position(const Forest& host, VertexId v) {
  detail::require(host.contains(v), "map.vertex", "vertex " + std::to_string(v) + " out of range");
  const auto comp = host.component(v);
  detail::require(host.tree(comp).is_perfect(), "map.perfect", "component of vertex " + std::to_string(v) + " is not perfect");
  detail::require(detail::on_leftmost_path(host, v), "map.leftmost_path",
                  "vertex " + std::to_string(v) + " is not on the path from the root to the leftmost leaf");
  PathPosition p;
  p.leaf = host.leftmost_leaf(comp);
  p.distance = host.depth(p.leaf) - host.depth(v);
  return p;
}

VertexId canonical_center(const RootedTree& t, VertexId v) {
  detail::require(t.contains(v), "map.vertex", "vertex " + std::to_string(v) + " out of range");
  return leftmost_path_vertex_at_depth(t, t.depth(v));
}

}  // namespace hkstar
