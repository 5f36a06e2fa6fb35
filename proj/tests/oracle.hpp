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

// Test-side reference computations written against plain edge lists, with
// no calls into the library's counting code.

#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;

inline Edges edges_from_parents(const std::vector<int>& parents) {
  Edges e;
  for (int v = 0; v < static_cast<int>(parents.size()); ++v)
    if (parents[static_cast<std::size_t>(v)] >= 0) e.emplace_back(parents[static_cast<std::size_t>(v)], v);
  return e;
}

inline std::vector<std::uint64_t> adjacency(int n, const Edges& edges) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }
  return adj;
}

inline bool independent(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  for (std::uint64_t m = mask; m; m &= m - 1)
    if (adj[static_cast<std::size_t>(std::countr_zero(m))] & mask) return false;
  return true;
}

/// Counts independent sets by size, optionally requiring the bits of `must`
/// and avoiding the bits of `avoid`. Only for n <= 26 or so.
inline std::vector<std::uint64_t> profile(int n, const Edges& edges, std::uint64_t must = 0, std::uint64_t avoid = 0) {
  const auto adj = adjacency(n, edges);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask & must) != must || (mask & avoid)) continue;
    if (independent(adj, mask)) ++out[static_cast<std::size_t>(std::popcount(mask))];
  }
  return out;
}

/// Parent array of the perfect r-ary tree with h levels in level order.
inline std::vector<int> perfect_parents(int r, int h) {
  std::size_t n = 0, width = 1;
  for (int i = 0; i < h; ++i, width *= static_cast<std::size_t>(r)) n += width;
  std::vector<int> p(n);
  p[0] = -1;
  for (std::size_t i = 1; i < n; ++i) p[i] = static_cast<int>((i - 1) / static_cast<std::size_t>(r));
  return p;
}

/// Uniform random labeled tree on n vertices (random Pruefer sequence),
/// returned as a parent array rooted at 0.
inline std::vector<int> random_tree(int n, std::mt19937_64& rng) {
  std::vector<int> parents(static_cast<std::size_t>(n), -1);
  if (n == 1) return parents;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  if (n == 2) {
    adj[0].push_back(1);
    adj[1].push_back(0);
  } else {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& x : seq) x = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    for (int x : seq) {
      int leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      adj[static_cast<std::size_t>(leaf)].push_back(x);
      adj[static_cast<std::size_t>(x)].push_back(leaf);
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(x)];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 1) (a < 0 ? a : b) = v;
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> stack{0};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        parents[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
  }
  return parents;
}

}  // namespace oracle
