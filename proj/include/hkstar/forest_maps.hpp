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

// Leaf-to-leaf comparisons inside a forest of perfect trees, and the rule
// that picks the leaf with the largest star.

#pragma once

#include <string_view>
#include <vector>

#include "hkstar/counting.hpp"
#include "hkstar/injections.hpp"

namespace hkstar {

/// Plane embedding of T_1 (the component of l1) into T_2 sending l1 to l2.
/// `mirror` is defined on V(T_1) and its image, kNoVertex elsewhere.
struct Embedding {
  std::vector<VertexId> forward;  // indexed by local id in T_1, global ids
  std::vector<VertexId> mirror;   // indexed by global id
  VertexId top = kNoVertex;       // image of T_1's root

  bool defined(VertexId g) const { return mirror[static_cast<std::size_t>(g)] != kNoVertex; }
  VertexId operator()(VertexId g) const { return mirror[static_cast<std::size_t>(g)]; }
};

/// T_1 must be no taller than T_2 and the arities must agree (a single
/// vertex matches any arity). Throws PreconditionError otherwise.
Embedding level_embedding(const Forest& f, VertexId l1, VertexId l2);

enum class LeafRule { kAllEvenTallest, kShortestOdd };
std::string_view rule_name(LeafRule r) noexcept;

struct LeafSelection {
  std::size_t tree_index = 0;
  VertexId leaf = kNoVertex;  // global id
  LeafRule rule = LeafRule::kAllEvenTallest;
};

/// Among components of maximum arity (single vertices count for every
/// arity): the tallest one if all level counts are even, else the shortest
/// with an odd level count. Ties go to the lowest index; the leaf returned
/// is that component's leftmost leaf. Throws on a non-perfect component.
LeafSelection best_leaf(const Forest& f);

/// Different arities, r_1 < r_2: maps {l1 in I, l2 not} to {l2 in I, l1 not}.
MapResult arity_map(const Forest& f, VertexId l1, VertexId l2, const VertexSet& input, const MapOptions& options = {});

/// Equal arity, h_1 < h_2. With h_1 even the input holds l1 and not l2 and
/// the output the reverse; with h_1 odd the directions swap.
MapResult level_map(const Forest& f, VertexId l1, VertexId l2, const VertexSet& input, const MapOptions& options = {});

/// Every vertex arity_map may read or change: V(T_1) plus the closed
/// neighbourhood of p(l2).
VertexSet arity_map_window(const Forest& f, VertexId l1, VertexId l2);
/// Every vertex level_map may read or change: V(T_1) and its image.
VertexSet level_map_window(const Forest& f, VertexId l1, VertexId l2);

/// |I_F^k(v)| via per-component profiles.
BigCount forest_count_star(const Forest& f, VertexId v, std::size_t k);

}  // namespace hkstar
