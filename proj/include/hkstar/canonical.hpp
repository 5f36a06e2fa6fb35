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

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hkstar/tree.hpp"

namespace hkstar {

/// AHU encoding of the underlying free tree: a balanced-parenthesis string of
/// length 2n, rooted at the center (the smaller of the two codes when the
/// tree is bicentral). Equal codes iff the free trees are isomorphic.
struct CanonicalCode {
  std::string code;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const RootedTree& t);
CanonicalCode canonical_code(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

/// Tree whose AHU string is `code`, rooted at the code's root with vertices
/// numbered in breadth-first order.
RootedTree tree_from_code(const std::string& code);

/// Labeled tree on n >= 2 vertices with the given Prüfer sequence (length n-2,
/// entries in [0, n)). Rooted at vertex 0.
RootedTree tree_from_prufer(std::size_t n, const std::vector<VertexId>& sequence);

inline constexpr std::size_t kDefaultTreeCap = 10;

/// One representative per isomorphism class of free trees on n vertices,
/// sorted by canonical code. Built by attaching a leaf to every vertex of every
/// class on n-1 vertices and deduplicating by canonical code.
/// Throws PreconditionError when n < 1 or n > cap.
std::vector<RootedTree> enumerate_unlabeled_trees(std::size_t n, std::size_t cap = kDefaultTreeCap);

/// Same classes, found by decoding all n^(n-2) Prüfer sequences and
/// deduplicating by canonical code. Exponential; used as an oracle.
std::vector<RootedTree> enumerate_unlabeled_trees_prufer(std::size_t n);

}  // namespace hkstar
