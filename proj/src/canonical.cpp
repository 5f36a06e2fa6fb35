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

#include "hkstar/canonical.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "hkstar/errors.hpp"

namespace hkstar {
namespace {

using Adjacency = std::vector<std::vector<VertexId>>;

Adjacency adjacency(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Adjacency adj(n);
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

std::vector<VertexId> centers(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<VertexId> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(static_cast<VertexId>(i));
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<VertexId> layer;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = adj[i].size();
    if (degree[i] <= 1) layer.push_back(static_cast<VertexId>(i));
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<VertexId> next;
    for (VertexId v : layer)
      for (VertexId w : adj[static_cast<std::size_t>(v)])
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Iterative post-order so deep paths do not recurse.
std::string rooted_code(const Adjacency& adj, VertexId root) {
  const std::size_t n = adj.size();
  std::vector<VertexId> parent(n, kNoVertex), order;
  order.reserve(n);
  std::vector<VertexId> stack{root};
  std::vector<bool> seen(n, false);
  seen[static_cast<std::size_t>(root)] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (VertexId w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      parent[static_cast<std::size_t>(w)] = v;
      stack.push_back(w);
    }
  }
  std::vector<std::vector<std::string>> parts(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto v = static_cast<std::size_t>(*it);
    auto& p = parts[v];
    std::sort(p.begin(), p.end());
    std::string s = "(";
    for (auto& c : p) s += c;
    s += ')';
    p.clear();
    p.shrink_to_fit();
    if (parent[v] != kNoVertex) parts[static_cast<std::size_t>(parent[v])].push_back(std::move(s));
    else code[v] = std::move(s);
  }
  return code[static_cast<std::size_t>(root)];
}

}  // namespace

CanonicalCode canonical_code(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  auto adj = adjacency(n, edges);
  std::string best;
  for (VertexId c : centers(adj)) {
    auto s = rooted_code(adj, c);
    if (best.empty() || s < best) best = std::move(s);
  }
  return CanonicalCode{std::move(best)};
}

CanonicalCode canonical_code(const RootedTree& t) { return canonical_code(t.size(), t.edges()); }

RootedTree tree_from_code(const std::string& code) {
  if (code.size() < 2 || code.size() % 2) throw PreconditionError("code.format", "malformed tree code");
  // First pass: parse into a nested structure with provisional ids.
  std::vector<VertexId> parent;
  std::vector<std::vector<VertexId>> kids;
  std::vector<VertexId> stack;
  for (char ch : code) {
    if (ch == '(') {
      auto id = static_cast<VertexId>(parent.size());
      parent.push_back(stack.empty() ? kNoVertex : stack.back());
      kids.emplace_back();
      if (!stack.empty()) kids[static_cast<std::size_t>(stack.back())].push_back(id);
      stack.push_back(id);
    } else if (ch == ')') {
      if (stack.empty()) throw PreconditionError("code.format", "unbalanced tree code");
      stack.pop_back();
      if (stack.empty() && parent.size() * 2 != code.size())
        throw PreconditionError("code.format", "tree code has trailing content");
    } else {
      throw PreconditionError("code.format", "unexpected character in tree code");
    }
  }
  if (!stack.empty()) throw PreconditionError("code.format", "unbalanced tree code");
  // Relabel breadth-first.
  std::vector<VertexId> relabel(parent.size());
  std::vector<VertexId> bfs{0};
  for (std::size_t h = 0; h < bfs.size(); ++h)
    for (VertexId c : kids[static_cast<std::size_t>(bfs[h])]) bfs.push_back(c);
  for (std::size_t i = 0; i < bfs.size(); ++i) relabel[static_cast<std::size_t>(bfs[i])] = static_cast<VertexId>(i);
  std::vector<VertexId> parents(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i)
    parents[static_cast<std::size_t>(relabel[i])] = parent[i] == kNoVertex ? kNoVertex : relabel[static_cast<std::size_t>(parent[i])];
  return RootedTree::from_parents(std::move(parents));
}

RootedTree tree_from_prufer(std::size_t n, const std::vector<VertexId>& sequence) {
  if (n < 2 || sequence.size() != n - 2) throw PreconditionError("prufer.length", "sequence length must be n - 2");
  std::vector<int> degree(n, 1);
  for (VertexId x : sequence) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw PreconditionError("prufer.range", "entry out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (std::size_t i = 0; i < n; ++i)
    if (degree[i] == 1) leaves.push(static_cast<VertexId>(i));
  for (VertexId x : sequence) {
    VertexId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  VertexId a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());

  Adjacency adj = adjacency(n, edges);
  std::vector<VertexId> parents(n, kNoVertex);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> bfs{0};
  seen[0] = true;
  for (std::size_t h = 0; h < bfs.size(); ++h)
    for (VertexId w : adj[static_cast<std::size_t>(bfs[h])])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        parents[static_cast<std::size_t>(w)] = bfs[h];
        bfs.push_back(w);
      }
  return RootedTree::from_parents(std::move(parents));
}

std::vector<RootedTree> enumerate_unlabeled_trees(std::size_t n, std::size_t cap) {
  if (n < 1) throw PreconditionError("enum.n", "vertex count must be at least 1");
  if (n > cap) throw PreconditionError("enum.cap", "vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::set<std::string> codes{"()"};
  for (std::size_t m = 2; m <= n; ++m) {
    std::set<std::string> next;
    for (const auto& c : codes) {
      RootedTree t = tree_from_code(c);
      auto edges = t.edges();
      for (std::size_t v = 0; v < t.size(); ++v) {
        edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(t.size()));
        next.insert(canonical_code(t.size() + 1, edges).code);
        edges.pop_back();
      }
    }
    codes = std::move(next);
  }
  std::vector<RootedTree> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(tree_from_code(c));
  return out;
}

std::vector<RootedTree> enumerate_unlabeled_trees_prufer(std::size_t n) {
  if (n < 1) throw PreconditionError("enum.n", "vertex count must be at least 1");
  if (n <= 2) return enumerate_unlabeled_trees(n, n);
  std::set<std::string> codes;
  std::vector<VertexId> seq(n - 2, 0);
  while (true) {
    codes.insert(canonical_code(tree_from_prufer(n, seq)).code);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == static_cast<VertexId>(n)) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::vector<RootedTree> out;
  for (const auto& c : codes) out.push_back(tree_from_code(c));
  return out;
}

}  // namespace hkstar
