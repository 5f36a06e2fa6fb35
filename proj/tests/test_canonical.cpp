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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hkstar/canonical.hpp"
#include "hkstar/errors.hpp"

using namespace hkstar;

namespace {

// Free trees on n = 1..12 vertices (OEIS A000055).
constexpr std::size_t kFreeTrees[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};

RootedTree relabel(const RootedTree& t, const std::vector<VertexId>& perm) {
  std::vector<VertexId> parents(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) {
    const VertexId p = t.parent(static_cast<VertexId>(v));
    parents[static_cast<std::size_t>(perm[v])] = p == kNoVertex ? kNoVertex : perm[static_cast<std::size_t>(p)];
  }
  return RootedTree::from_parents(parents);
}

}  // namespace

TEST_CASE("codes identify isomorphism classes") {
  const auto path3 = parse_tree("3\n-1 0 1");
  const auto star3 = parse_tree("3\n-1 0 0");
  const auto path3_end = parse_tree("3\n1 2 -1");
  CHECK(canonical_code(path3) == canonical_code(star3));
  CHECK(canonical_code(path3) == canonical_code(path3_end));
  CHECK(canonical_code(parse_tree("4\n-1 0 1 2")) != canonical_code(parse_tree("4\n-1 0 0 0")));
  CHECK(canonical_code(build_perfect(2, 3)).code.size() == 14);
  CHECK(canonical_code(build_perfect(2, 1)).code == "()");
}

TEST_CASE("codes are invariant under relabeling") {
  std::mt19937 rng(20261019);
  for (const auto& t : {build_perfect(2, 3), build_perfect(3, 3), parse_tree("8\n-1 0 1 2 3 1 5 0")}) {
    const auto code = canonical_code(t);
    std::vector<VertexId> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_code(relabel(t, perm)) == code);
    }
  }
}

TEST_CASE("tree_from_code rebuilds the class") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : enumerate_unlabeled_trees(n)) {
      const auto code = canonical_code(t);
      CHECK(canonical_code(tree_from_code(code.code)) == code);
    }
}

TEST_CASE("leaf-extension enumeration matches known counts") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto trees = enumerate_unlabeled_trees(n, 12);
    CHECK(trees.size() == kFreeTrees[n]);
    std::set<CanonicalCode> codes;
    for (const auto& t : trees) {
      CHECK(t.size() == n);
      codes.insert(canonical_code(t));
    }
    CHECK(codes.size() == trees.size());
  }
}

TEST_CASE("Pruefer oracle agrees with leaf extension up to n = 9") {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<CanonicalCode> a, b;
    for (const auto& t : enumerate_unlabeled_trees(n)) a.insert(canonical_code(t));
    for (const auto& t : enumerate_unlabeled_trees_prufer(n)) b.insert(canonical_code(t));
    CHECK_MESSAGE(a == b, "n = " << n);
  }
}

TEST_CASE("Pruefer decoding") {
  // Sequence (3, 3, 3) on 5 vertices is the star centred at 3.
  const auto t = tree_from_prufer(5, {3, 3, 3});
  CHECK(t.root() == 0);
  CHECK(t.degree(3) == 4);
  CHECK(tree_from_prufer(2, {}).size() == 2);
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_unlabeled_trees(0), PreconditionError);
  CHECK_THROWS_AS(enumerate_unlabeled_trees(11), PreconditionError);
  CHECK(enumerate_unlabeled_trees(11, 11).size() == 235);
}
