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

MapResult map_star(const Forest& host, VertexId v, const VertexSet& input, const MapOptions& options) {
  const PathPosition pos = leftmost_path_position(host, v);
  detail::require(pos.distance > 0, "map.v_is_leaf", "v is the leaf itself; there is nothing to map");
  return pos.distance % 2 == 0 ? phi_even(host, v, input, options) : phi_odd(host, v, input, options);
}

MapResult map_star(const RootedTree& t, VertexId v, const VertexSet& input, const MapOptions& options) {
  return map_star(Forest::single(t), v, input, options);
}

}  // namespace hkstar
