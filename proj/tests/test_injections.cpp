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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "hkstar/errors.hpp"
#include "hkstar/injections.hpp"
#include "oracle.hpp"

using namespace hkstar;

namespace {

const MapOptions kMonitored{.monitor = true, .trace = true};

std::vector<VertexId> run_map(const RootedTree& t, VertexId v, std::initializer_list<VertexId> ids) {
  return map_star(t, v, VertexSet(t.size(), ids), kMonitored).set.ids();
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(HKSTAR_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Maps every independent set of `n`-vertex `edges` that contains `from_bit`
/// and avoids `to_bit`, using `apply`; checks outputs are independent, swap
/// the two roles, keep size, and never collide. Returns the domain size.
template <typename Apply>
std::size_t audit(int n, const oracle::Edges& edges, int from, int to, Apply apply) {
  const auto adj = oracle::adjacency(n, edges);
  std::set<std::uint64_t> images;
  std::size_t domain = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> from & 1) || (mask >> to & 1) || !oracle::independent(adj, mask)) continue;
    ++domain;
    const std::uint64_t out = apply(mask);
    CHECK(oracle::independent(adj, out));
    CHECK((out >> to & 1));
    CHECK(!(out >> from & 1));
    CHECK(std::popcount(out) == std::popcount(mask));
    CHECK(images.insert(out).second);
  }
  return domain;
}

}  // namespace

TEST_CASE("cas examples") {
  const auto td = build_perfect(2, 3), tu = build_perfect(2, 4);
  const VertexId u = 7;  // u_j has global id 7 + j
  VertexSet fig(22, {u + 0, u + 3, u + 4, u + 11, u + 12, u + 13, u + 14, 1, 5});
  const auto r = cas(td, tu, fig, kMonitored);
  CHECK(r.set.ids() == std::vector<VertexId>{0, 3, 4, 5, u + 1, u + 11, u + 12, u + 13, u + 14});
  CHECK(replay_trace(fig, r.trace) == r.set);

  const auto single = cas(td, tu, VertexSet(22, {u}), kMonitored);
  CHECK(single.set.ids() == std::vector<VertexId>{0});
  CHECK(single.trace.front().action == TraceAction::kSwap);

  CHECK_THROWS_AS(cas(td, tu, VertexSet(22, {u, 0})), PreconditionError);
  CHECK_THROWS_AS(cas(td, tu, VertexSet(22, {1})), PreconditionError);
  CHECK_THROWS_AS(cas(build_perfect(2, 2), tu, VertexSet(18, {3})), PreconditionError);
  CHECK_THROWS_AS(cas(td, build_perfect(2, 3), VertexSet(14, {7})), PreconditionError);
  CHECK_THROWS_AS(cas(td, build_perfect(3, 4), VertexSet(47, {7})), PreconditionError);
}

TEST_CASE("reference CAS trace matches the golden file byte for byte") {
  const auto td = build_perfect(2, 3), tu = build_perfect(2, 4);
  VertexSet fig(22, {7, 10, 11, 18, 19, 20, 21, 1, 5});
  const auto r = cas(td, tu, fig, kMonitored);
  CHECK(format_trace(r.trace, cas_labeler(td)) == read_golden("cas_example_trace.jsonl"));
  REQUIRE(r.trace.size() == 6);
  CHECK(r.trace[2].action == TraceAction::kSkip);
  CHECK(r.trace[5].action == TraceAction::kTerminate);
}

TEST_CASE("phi_even examples") {
  const auto p25 = build_perfect(2, 5);
  CHECK(phi_even(p25, 0, VertexSet(31, {0, 7}), kMonitored).set.ids() == std::vector<VertexId>{1, 15});
  CHECK(phi_even(p25, 0, VertexSet(31, {0, 4, 7}), kMonitored).set.ids() == std::vector<VertexId>{1, 15, 16});
  const auto p23 = build_perfect(2, 3);
  CHECK(phi_even(p23, 0, VertexSet(7, {0, 4}), kMonitored).set.ids() == std::vector<VertexId>{3, 4});
  CHECK_THROWS_AS(phi_even(build_perfect(2, 4), 0, VertexSet(15, {0})), PreconditionError);
}

TEST_CASE("phi_odd examples") {
  const auto p24 = build_perfect(2, 4);
  CHECK(phi_odd(p24, 0, VertexSet(15, {0, 3}), kMonitored).set.ids() == std::vector<VertexId>{2, 7});
  CHECK(phi_odd(p24, 0, VertexSet(15, {0, 3, 5}), kMonitored).set.ids() == std::vector<VertexId>{1, 2, 7});
  CHECK(phi_odd(build_perfect(2, 2), 0, VertexSet(3, {0}), kMonitored).set.ids() == std::vector<VertexId>{1});
  CHECK_THROWS_AS(phi_odd(build_perfect(2, 3), 0, VertexSet(7, {0})), PreconditionError);
}

TEST_CASE("map_star dispatch and errors") {
  CHECK(run_map(build_perfect(2, 5), 0, {0, 7}) == std::vector<VertexId>{1, 15});
  CHECK(run_map(build_perfect(2, 4), 0, {0, 3}) == std::vector<VertexId>{2, 7});
  for (const auto& t : {build_perfect(2, 4), build_perfect(3, 3)})
    for (VertexId v : leftmost_path(t, t.root()))
      if (v != t.leftmost_leaf()) CHECK(run_map(t, v, {v}) == std::vector<VertexId>{t.leftmost_leaf()});
  const auto p24 = build_perfect(2, 4);
  CHECK_THROWS_AS(map_star(p24, 7, VertexSet(15, {7})), PreconditionError);        // v is the leaf
  CHECK_THROWS_AS(map_star(p24, 2, VertexSet(15, {2})), PreconditionError);        // off the path
  CHECK_THROWS_AS(map_star(p24, 0, VertexSet(15, {0, 7})), PreconditionError);     // contains the leaf
  CHECK_THROWS_AS(map_star(p24, 0, VertexSet(15, {0, 1})), PreconditionError);     // not independent
  CHECK_THROWS_AS(map_star(p24, 0, VertexSet(15, {3})), PreconditionError);        // misses v
  CHECK_THROWS_AS(map_star(p24, 0, VertexSet(16, {0})), PreconditionError);        // wrong universe
  CHECK(canonical_center(p24, 5) == 3);
  CHECK(canonical_center(p24, 14) == 7);
}

TEST_CASE("traces replay to the output") {
  const auto t = build_perfect(2, 5);
  for (auto ids : {std::vector<VertexId>{0, 7, 4}, {0, 7, 9, 10}, {0, 4, 5, 6}}) {
    const VertexSet in(31, std::span<const VertexId>(ids));
    const auto r = map_star(t, 0, in, kMonitored);
    CHECK(replay_trace(in, r.trace) == r.set);
    CHECK(r.trace.back().action == TraceAction::kTerminate);
    CHECK(r.trace.back().set_after == r.set.ids());
  }
}

TEST_CASE("exhaustive injectivity against the plain-mask oracle") {
  for (auto [r, h] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
    const auto t = build_perfect(r, h);
    const int n = static_cast<int>(t.size());
    const auto edges = oracle::edges_from_parents(oracle::perfect_parents(r, h));
    const VertexId leaf = t.leftmost_leaf();
    for (VertexId v : leftmost_path(t, t.root())) {
      if (v == leaf) continue;
      const auto domain = audit(n, edges, v, leaf, [&](std::uint64_t mask) {
        return map_star(t, v, VertexSet::from_bits(t.size(), mask), kMonitored).set.low_bits();
      });
      CHECK(domain > 0);
    }
  }
}

TEST_CASE("cas is injective on small hosts") {
  for (auto [hd, hu] : {std::pair{1, 2}, {1, 3}, {3, 4}}) {
    const auto td = build_perfect(2, hd), tu = build_perfect(2, hu);
    const int nd = static_cast<int>(td.size());
    const int n = nd + static_cast<int>(tu.size());
    auto parents = oracle::perfect_parents(2, hd);
    for (int p : oracle::perfect_parents(2, hu)) parents.push_back(p < 0 ? -1 : p + nd);
    const auto edges = oracle::edges_from_parents(parents);
    const auto domain = audit(n, edges, nd, 0, [&](std::uint64_t mask) {
      return cas(td, tu, VertexSet::from_bits(static_cast<std::size_t>(n), mask), kMonitored).set.low_bits();
    });
    CHECK(domain > 0);
  }
}
