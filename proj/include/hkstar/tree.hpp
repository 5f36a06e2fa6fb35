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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkstar/vertex_set.hpp"

namespace hkstar {

/// Arity and level count of a perfect tree. For a single vertex (levels == 1)
/// the arity carries no information.
struct PerfectShape {
  int arity = 2;
  int levels = 1;
  friend bool operator==(const PerfectShape&, const PerfectShape&) = default;
};

/// Ordered rooted tree. Children of every vertex are kept in ascending id
/// order, and that order is the plane (left-to-right) order.
class RootedTree {
 public:
  RootedTree() = default;

  /// `parents[i]` is the parent of i; exactly one entry is kNoVertex (-1).
  /// Throws PreconditionError("tree.structure") for anything that is not a tree.
  static RootedTree from_parents(std::vector<VertexId> parents);

  std::size_t size() const noexcept { return parent_.size(); }
  VertexId root() const noexcept { return root_; }
  VertexId parent(VertexId v) const { return parent_[static_cast<std::size_t>(v)]; }
  std::span<const VertexId> children(VertexId v) const {
    auto i = static_cast<std::size_t>(v);
    return std::span<const VertexId>(child_list_).subspan(child_begin_[i], child_begin_[i + 1] - child_begin_[i]);
  }
  /// c_j(v) with j 1-based; kNoVertex when v has fewer than j children.
  VertexId child(VertexId v, int j) const {
    auto c = children(v);
    return j >= 1 && static_cast<std::size_t>(j) <= c.size() ? c[static_cast<std::size_t>(j - 1)] : kNoVertex;
  }
  int depth(VertexId v) const { return depth_[static_cast<std::size_t>(v)]; }
  /// No children (rooted sense).
  bool is_leaf(VertexId v) const { return children(v).empty(); }
  /// Number of incident edges.
  int degree(VertexId v) const {
    return static_cast<int>(children(v).size()) + (parent(v) == kNoVertex ? 0 : 1);
  }
  const std::vector<VertexId>& parents() const noexcept { return parent_; }
  /// Vertices in breadth-first order from the root.
  const std::vector<VertexId>& bfs_order() const noexcept { return bfs_; }
  const std::optional<PerfectShape>& shape() const noexcept { return shape_; }
  bool is_perfect() const noexcept { return shape_.has_value(); }
  /// Reached from the root by repeatedly taking the first child.
  VertexId leftmost_leaf() const;
  bool contains(VertexId v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < size(); }

  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.parent_ == b.parent_; }

 private:
  friend RootedTree build_perfect(int arity, int levels);

  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_begin_;
  std::vector<VertexId> child_list_;
  std::vector<int> depth_;
  std::vector<VertexId> bfs_;
  VertexId root_ = kNoVertex;
  std::optional<PerfectShape> shape_;
};

/// Perfect r-ary tree with `levels` levels in level order: root 0, children of
/// i are r*i+1 .. r*i+r. Throws PreconditionError for arity < 2 (unless
/// levels == 1) or levels < 1.
RootedTree build_perfect(int arity, int levels);

/// Number of vertices of the perfect tree, (r^h - 1) / (r - 1).
std::size_t perfect_size(int arity, int levels);

/// Tree file text, or the shorthand `perfect:<r>:<h>`. Throws ParseError.
RootedTree parse_tree(const std::string& text);

/// Parent-array text form accepted by parse_tree.
std::string serialize_tree(const RootedTree& t);

/// Path from v down to the leftmost leaf, inclusive at both ends.
/// Throws PreconditionError when v is not an ancestor of (or equal to) it.
std::vector<VertexId> leftmost_path(const RootedTree& t, VertexId v);

/// Ancestor of the leftmost leaf at the given depth.
VertexId leftmost_path_vertex_at_depth(const RootedTree& t, int depth);

/// Disjoint union of rooted trees. Global ids are assigned by cumulative
/// offsets in component order.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);
  static Forest single(const RootedTree& t) { return Forest(std::vector<RootedTree>{t}); }

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t tree_count() const noexcept { return trees_.size(); }
  const RootedTree& tree(std::size_t i) const { return trees_[i]; }
  const std::vector<RootedTree>& trees() const noexcept { return trees_; }
  std::size_t offset(std::size_t i) const { return offsets_[i]; }

  std::size_t component(VertexId g) const { return component_[static_cast<std::size_t>(g)]; }
  VertexId local(VertexId g) const { return g - static_cast<VertexId>(offsets_[component(g)]); }
  VertexId global(std::size_t tree, VertexId local) const {
    return static_cast<VertexId>(offsets_[tree]) + local;
  }

  VertexId parent(VertexId g) const { return parent_[static_cast<std::size_t>(g)]; }
  std::span<const VertexId> children(VertexId g) const {
    auto i = static_cast<std::size_t>(g);
    return std::span<const VertexId>(child_list_).subspan(child_begin_[i], child_begin_[i + 1] - child_begin_[i]);
  }
  VertexId child(VertexId g, int j) const {
    auto c = children(g);
    return j >= 1 && static_cast<std::size_t>(j) <= c.size() ? c[static_cast<std::size_t>(j - 1)] : kNoVertex;
  }
  int depth(VertexId g) const { return depth_[static_cast<std::size_t>(g)]; }
  bool is_leaf(VertexId g) const { return children(g).empty(); }
  bool contains(VertexId g) const noexcept { return g >= 0 && static_cast<std::size_t>(g) < size(); }
  bool adjacent(VertexId a, VertexId b) const { return parent(a) == b || parent(b) == a; }

  VertexId root(std::size_t tree) const { return global(tree, trees_[tree].root()); }
  VertexId leftmost_leaf(std::size_t tree) const { return global(tree, trees_[tree].leftmost_leaf()); }
  /// Levels of the full subtree below g when g's component is perfect.
  int subtree_levels(VertexId g) const;

  /// No edge of the forest has both ends in s.
  bool is_independent(const VertexSet& s) const;

 private:
  std::vector<RootedTree> trees_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> component_;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_begin_;
  std::vector<VertexId> child_list_;
  std::vector<int> depth_;
};

/// Forest file text: tree blocks separated by one blank line. Each block is
/// either a tree file body or a `perfect:<r>:<h>` line. Throws ParseError.
Forest parse_forest(const std::string& text);

/// Loads `perfect:<r>:<h>` directly, anything else as a path to a tree file.
RootedTree load_tree(const std::string& spec);

/// A path to a forest file, or an inline list of shorthands joined by '+',
/// e.g. `perfect:2:2+perfect:3:2`.
Forest load_forest(const std::string& spec);

}  // namespace hkstar
