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

#include "hkstar/forest_maps.hpp"

#include <algorithm>
#include <optional>

#include "injections/internal.hpp"

namespace hkstar {
namespace {

using detail::require;
using detail::violated;

const PerfectShape& perfect_shape(const Forest& f, VertexId g, const char* role) {
  require(f.contains(g), "forest.vertex", std::string(role) + " out of range");
  const auto& shape = f.tree(f.component(g)).shape();
  require(shape.has_value(), "forest.perfect", std::string(role) + " lies in a non-perfect component");
  return *shape;
}

void require_leaf(const Forest& f, VertexId g, const char* role) {
  perfect_shape(f, g, role);
  require(f.is_leaf(g), "forest.leaf", std::string(role) + " = " + std::to_string(g) + " is not a leaf");
}

// 0-based child indices along the path from the root of g's component to g.
std::vector<std::size_t> plane_path(const Forest& f, VertexId g) {
  std::vector<std::size_t> path;
  for (VertexId x = g; f.parent(x) != kNoVertex; x = f.parent(x)) {
    auto sib = f.children(f.parent(x));
    path.push_back(static_cast<std::size_t>(std::find(sib.begin(), sib.end(), x) - sib.begin()));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

VertexId ancestor(const Forest& f, VertexId g, int steps) {
  for (; steps > 0; --steps) g = f.parent(g);
  return g;
}

void add_subtree(const Forest& f, VertexSet& out, VertexId root) {
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    out.insert(x);
    for (VertexId c : f.children(x)) stack.push_back(c);
  }
}

void check_distinct_trees(const Forest& f, VertexId l1, VertexId l2) {
  require(f.component(l1) != f.component(l2), "forest.distinct", "the two leaves lie in the same component");
}

}  // namespace

std::string_view rule_name(LeafRule r) noexcept {
  return r == LeafRule::kAllEvenTallest ? "all-even-tallest" : "shortest-odd";
}

Embedding level_embedding(const Forest& f, VertexId l1, VertexId l2) {
  require_leaf(f, l1, "l1");
  require_leaf(f, l2, "l2");
  check_distinct_trees(f, l1, l2);
  const auto& s1 = perfect_shape(f, l1, "l1");
  const auto& s2 = perfect_shape(f, l2, "l2");
  require(s1.levels <= s2.levels, "forest.levels", "T_1 is taller than T_2");
  require(s1.levels == 1 || s1.arity == s2.arity, "forest.arity", "components have different arities");

  const int h1 = s1.levels;
  const std::size_t t1 = f.component(l1);
  const VertexId x1 = f.root(t1);
  const VertexId x2 = ancestor(f, l2, h1 - 1);
  const auto p1 = plane_path(f, l1);
  const auto p2full = plane_path(f, l2);
  const std::vector<std::size_t> p2(p2full.end() - (h1 - 1), p2full.end());

  Embedding e;
  e.top = x2;
  e.forward.assign(f.tree(t1).size(), kNoVertex);
  e.mirror.assign(f.size(), kNoVertex);
  // Breadth-first over T_1; children of path vertices get the transposition
  // that swaps the path index of l1 with that of l2.
  struct Item {
    VertexId x, y;
    bool on_path;
  };
  std::vector<Item> queue{{x1, x2, true}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Item it = queue[head];
    e.forward[static_cast<std::size_t>(f.local(it.x))] = it.y;
    e.mirror[static_cast<std::size_t>(it.x)] = it.y;
    e.mirror[static_cast<std::size_t>(it.y)] = it.x;
    auto cx = f.children(it.x);
    auto cy = f.children(it.y);
    const auto level = static_cast<std::size_t>(f.depth(it.x) - f.depth(x1));
    for (std::size_t a = 0; a < cx.size(); ++a) {
      std::size_t b = a;
      bool next_on_path = false;
      if (it.on_path) {
        const std::size_t i = p1[level], j = p2[level];
        b = a == i ? j : (a == j ? i : a);
        next_on_path = a == i;
      }
      queue.push_back({cx[a], cy[b], next_on_path});
    }
  }
  if (e(l1) != l2) violated("forest.embedding", "l1 is not sent to l2");
  for (VertexId x = x1; x < x1 + static_cast<VertexId>(f.tree(t1).size()); ++x) {
    const VertexId p = f.parent(x);
    if (p != kNoVertex && !f.adjacent(e(x), e(p))) violated("forest.embedding", "adjacency not preserved");
  }
  return e;
}

LeafSelection best_leaf(const Forest& f) {
  require(f.tree_count() > 0, "forest.empty", "forest has no components");
  int max_arity = 0;
  for (std::size_t i = 0; i < f.tree_count(); ++i) {
    const auto& shape = f.tree(i).shape();
    require(shape.has_value(), "forest.perfect", "component " + std::to_string(i) + " is not perfect");
    if (shape->levels > 1) max_arity = std::max(max_arity, shape->arity);
  }
  auto eligible = [&](std::size_t i) {
    const auto& s = *f.tree(i).shape();
    return s.levels == 1 || s.arity == max_arity;
  };
  std::optional<std::size_t> tallest, shortest_odd;
  for (std::size_t i = 0; i < f.tree_count(); ++i) {
    if (!eligible(i)) continue;
    const int h = f.tree(i).shape()->levels;
    if (!tallest || h > f.tree(*tallest).shape()->levels) tallest = i;
    if (h % 2 == 1 && (!shortest_odd || h < f.tree(*shortest_odd).shape()->levels)) shortest_odd = i;
  }
  LeafSelection sel;
  sel.rule = shortest_odd ? LeafRule::kShortestOdd : LeafRule::kAllEvenTallest;
  sel.tree_index = shortest_odd ? *shortest_odd : *tallest;
  sel.leaf = f.leftmost_leaf(sel.tree_index);
  return sel;
}

namespace {

void check_arity_pair(const Forest& f, VertexId l1, VertexId l2) {
  require_leaf(f, l1, "l1");
  require_leaf(f, l2, "l2");
  check_distinct_trees(f, l1, l2);
  const auto& s1 = perfect_shape(f, l1, "l1");
  const auto& s2 = perfect_shape(f, l2, "l2");
  require(s1.levels >= 2 && s2.levels >= 2, "forest.arity", "a single-vertex component has no arity to compare");
  require(s1.arity < s2.arity, "forest.arity",
          "need r_1 < r_2, got " + std::to_string(s1.arity) + " and " + std::to_string(s2.arity));
}

// level_embedding already checks leaves, arity and h_1 <= h_2.
void check_level_pair(const Forest& f, VertexId l1, VertexId l2) {
  require(perfect_shape(f, l1, "l1").levels < perfect_shape(f, l2, "l2").levels, "forest.levels", "need h_1 < h_2");
}

}  // namespace

VertexSet arity_map_window(const Forest& f, VertexId l1, VertexId l2) {
  check_arity_pair(f, l1, l2);
  VertexSet w(f.size());
  add_subtree(f, w, f.root(f.component(l1)));
  const VertexId p2 = f.parent(l2);
  w.insert(l2);
  if (p2 != kNoVertex) {
    w.insert(p2);
    if (f.parent(p2) != kNoVertex) w.insert(f.parent(p2));
    for (VertexId c : f.children(p2)) w.insert(c);
  }
  return w;
}

VertexSet level_map_window(const Forest& f, VertexId l1, VertexId l2) {
  const Embedding e = level_embedding(f, l1, l2);
  check_level_pair(f, l1, l2);
  VertexSet w(f.size());
  for (std::size_t g = 0; g < f.size(); ++g)
    if (e.defined(static_cast<VertexId>(g))) w.insert(static_cast<VertexId>(g));
  return w;
}

MapResult arity_map(const Forest& f, VertexId l1, VertexId l2, const VertexSet& input, const MapOptions& options) {
  check_arity_pair(f, l1, l2);
  require(input.universe() == f.size(), "map.universe", "set universe does not match the forest");
  require(f.is_independent(input), "map.independent", "input is not an independent set");
  require(input.contains(l1) && !input.contains(l2), "map.domain", "input must contain l1 and not l2");

  MapResult result{input, {}};
  VertexSet& work = result.set;
  detail::Recorder rec(options.trace, result.trace);
  auto move = [&](int iteration, TraceAction action, VertexId from, VertexId to) {
    work.erase(from);
    work.insert(to);
    rec.add(iteration, action, from, to, work);
  };

  move(0, TraceAction::kSwap, l1, l2);
  const VertexId p1 = f.parent(l1), p2 = f.parent(l2);
  if (!work.contains(p2)) {
    rec.add(1, TraceAction::kTerminate, kNoVertex, kNoVertex, work);
  } else {
    move(1, TraceAction::kPrimaryShift, p2, p1);
    // Siblings keep their relative order, so the construction for leftmost
    // leaves carries over to any pair of leaves.
    std::vector<VertexId> sib1, sib2;
    for (VertexId c : f.children(p1))
      if (c != l1) sib1.push_back(c);
    for (VertexId c : f.children(p2))
      if (c != l2) sib2.push_back(c);
    for (std::size_t i = 0; i < sib1.size(); ++i)
      if (work.contains(sib1[i])) move(2, TraceAction::kSecondaryShift, sib1[i], sib2[i]);
    const VertexId pp1 = f.parent(p1);
    if (pp1 != kNoVertex && work.contains(pp1)) move(2, TraceAction::kSecondaryShift, pp1, sib2[sib1.size()]);
    rec.add(3, TraceAction::kTerminate, kNoVertex, kNoVertex, work);
  }

  if (options.monitor) {
    if (work.size() != input.size()) violated("arity.output", "size changed");
    if (!f.is_independent(work)) violated("arity.output", "output is not independent");
    if (work.contains(l1) || !work.contains(l2)) violated("arity.output", "output must contain l2 and not l1");
  }
  return result;
}

MapResult level_map(const Forest& f, VertexId l1, VertexId l2, const VertexSet& input, const MapOptions& options) {
  const Embedding psi = level_embedding(f, l1, l2);
  check_level_pair(f, l1, l2);
  const int h1 = perfect_shape(f, l1, "l1").levels;
  require(input.universe() == f.size(), "map.universe", "set universe does not match the forest");
  require(f.is_independent(input), "map.independent", "input is not an independent set");

  // Even h_1 moves membership from l1 to l2; odd h_1 the other way.
  const bool even = h1 % 2 == 0;
  const VertexId from = even ? l1 : l2;
  const VertexId to = even ? l2 : l1;
  require(input.contains(from) && !input.contains(to), "map.domain",
          even ? "h_1 even: input must contain l1 and not l2" : "h_1 odd: input must contain l2 and not l1");

  MapResult result{input, {}};
  VertexSet& work = result.set;
  detail::Recorder rec(options.trace, result.trace);
  work.erase(from);
  work.insert(to);
  rec.add(0, TraceAction::kSwap, from, to, work);

  std::vector<VertexId> qs, qt;
  VertexSet visited(f.size());
  visited.insert(l1);
  visited.insert(l2);
  if (f.parent(to) != kNoVertex) {
    qs.push_back(f.parent(to));
    qt.push_back(f.parent(from));
    visited.insert(qs.back());
    visited.insert(qt.back());
  }

  for (std::size_t head = 0, iteration = 1;; ++iteration) {
    const int it = static_cast<int>(iteration);
    if (options.monitor) {
      if (work.size() != input.size()) violated("level.size", "set size changed");
      for (std::size_t i = head; i < qs.size(); ++i) {
        if (!psi.defined(qs[i]) || psi(qs[i]) != qt[i])
          violated("level.paired", "queues are not mirror images at position " + std::to_string(i));
        if (work.contains(qt[i]))
          violated("level.target_clear", "target-queue vertex " + std::to_string(qt[i]) + " is in the set");
      }
    }
    if (head == qs.size()) {
      rec.add(it, TraceAction::kTerminate, kNoVertex, kNoVertex, work);
      break;
    }
    const VertexId s = qs[head], t = qt[head];
    ++head;
    if (!work.contains(s)) {
      rec.add(it, TraceAction::kSkip, s, t, work);
      continue;
    }
    work.erase(s);
    work.insert(t);
    std::vector<VertexId> enq_s, enq_t;
    auto visit = [&](VertexId w) {
      if (visited.contains(w)) return;
      if (!psi.defined(w))
        violated("level.psi_domain", "neighbour " + std::to_string(w) + " of " + std::to_string(t) +
                                         " lies outside the embedding");
      const VertexId mw = psi(w);
      if (visited.contains(mw)) violated("level.psi_domain", "mirror of " + std::to_string(w) + " already visited");
      visited.insert(w);
      visited.insert(mw);
      qs.push_back(w);
      qt.push_back(mw);
      if (rec.enabled()) {
        enq_s.push_back(w);
        enq_t.push_back(mw);
      }
    };
    if (f.parent(t) != kNoVertex) visit(f.parent(t));
    for (VertexId c : f.children(t)) visit(c);
    rec.add(it, TraceAction::kSwap, s, t, work, std::move(enq_s), std::move(enq_t));
  }

  if (options.monitor) {
    if (!f.is_independent(work)) violated("level.output", "output is not independent");
    if (work.contains(from) || !work.contains(to)) violated("level.output", "output is in the wrong class");
  }
  return result;
}

BigCount forest_count_star(const Forest& f, VertexId v, std::size_t k) { return count_star(f, v, k); }

}  // namespace hkstar
