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

// Exhaustive checkers. Failures come back as verdicts carrying a witness
// that can be re-run on its own; only bad arguments throw.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkstar/canonical.hpp"
#include "hkstar/counting.hpp"
#include "hkstar/forest_maps.hpp"

namespace hkstar {

struct Witness {
  std::string structure;       // serialized tree or forest
  VertexId v = kNoVertex;      // star center, or first leaf for forest maps
  VertexId other = kNoVertex;  // comparison leaf, when there is one
  std::size_t k = 0;
  std::vector<VertexId> set;         // offending input
  std::vector<VertexId> second_set;  // colliding input, for injectivity failures
  std::string detail;
};

struct Verdict {
  std::string check;
  bool passed = true;
  std::optional<Witness> witness;
  std::uint64_t instances = 0;
  double elapsed_seconds = 0;
};

struct HkReport {
  CanonicalCode tree;
  std::size_t k = 0;
  VertexId max_star_vertex = kNoVertex;
  BigCount max_star_value;
  BigCount best_leaf_value;
  bool is_k_hk = true;
};

/// Maps every member of A (size k, or every size when k is empty) for the
/// pair (v, leftmost leaf) with monitors on; checks validity and that the
/// images are pairwise distinct.
Verdict check_injection_exhaustive(const RootedTree& t, VertexId v, std::optional<std::size_t> k = std::nullopt);

/// star(v, k) <= star(leftmost leaf, k) for every vertex and every k.
Verdict check_theorem_main(const RootedTree& t);

/// k-HK status for k = 1 .. min(k_max, independence number). A leaf is a
/// vertex of degree at most one.
std::vector<HkReport> check_hk(const RootedTree& t, std::size_t k_max);
/// A single k; sizes above the independence number are vacuously k-HK.
HkReport hk_report(const RootedTree& t, std::size_t k);

/// star(v, k) <= star(best_leaf, k) for every vertex and every k.
Verdict check_forest_theorem(const Forest& f);

enum class ForestLemma { kArity, kLevel };

/// How the forest-map domain is enumerated. kFull walks every independent
/// set of the forest. kWindow walks only sets supported on the map's window
/// (everything else empty) and additionally asserts the map stays inside
/// the window, which makes the two equivalent. kAuto picks kFull when the
/// forest has at most `full_limit` independent sets.
enum class DomainMode { kAuto, kFull, kWindow };
inline constexpr std::uint64_t kDefaultFullLimit = 20'000'000;

/// Exhaustive injectivity of arity_map / level_map for (l1, l2) with
/// monitors on, plus the lemma's star inequality from the DP counts.
Verdict check_forest_lemma(const Forest& f, VertexId l1, VertexId l2, ForestLemma lemma,
                           DomainMode mode = DomainMode::kAuto, std::uint64_t full_limit = kDefaultFullLimit);

/// Ordered tuples of `min_parts`..`max_parts` perfect trees drawn from
/// `shapes` (arity, levels) with at most `max_vertices` vertices in total.
std::vector<Forest> perfect_forest_pool(const std::vector<PerfectShape>& shapes, std::size_t min_parts,
                                        std::size_t max_parts, std::size_t max_vertices);

struct LemmaInstance {
  Forest forest;
  VertexId l1 = kNoVertex;
  VertexId l2 = kNoVertex;
  ForestLemma lemma = ForestLemma::kArity;
};

/// Two-component forests from `shapes` (both component orders) meeting the
/// hypotheses of either forest lemma. Each forest contributes the pair of
/// leftmost leaves and the pair of rightmost leaves.
std::vector<LemmaInstance> lemma_instances(const std::vector<PerfectShape>& shapes, std::size_t max_vertices);

/// Runs check_hk over `trees` on `workers` threads. Reports come back in
/// input order, then by k.
std::vector<HkReport> hk_sweep(const std::vector<RootedTree>& trees, std::size_t k_max, unsigned workers);

/// One JSON object per line, no trailing newline.
std::string to_json(const Verdict& v);
std::string to_json(const HkReport& r);

}  // namespace hkstar
