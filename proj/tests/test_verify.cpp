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

#include <json.hpp>

#include "hkstar/errors.hpp"
#include "hkstar/families.hpp"
#include "hkstar/verify.hpp"

using namespace hkstar;

namespace {

Forest forest_of(std::initializer_list<std::pair<int, int>> shapes) {
  std::vector<RootedTree> trees;
  for (auto [r, h] : shapes) trees.push_back(build_perfect(r, h));
  return Forest(std::move(trees));
}

std::size_t edge_count(const RootedTree& t) { return t.edges().size(); }

}  // namespace

TEST_CASE("family generators") {
  const auto star = spider({1, 1, 1});
  CHECK(star.size() == 4);
  CHECK(star.degree(star.root()) == 3);
  const auto cat = caterpillar(3, {1, 0, 1});
  CHECK(cat.size() == 5);
  CHECK(edge_count(cat) == 4);
  const auto path = spider({2, 2});
  CHECK(path.size() == 5);
  CHECK(canonical_code(path) == canonical_code(parse_tree("5\n-1 0 1 2 3")));
  CHECK_THROWS_AS(spider({}), PreconditionError);
  CHECK_THROWS_AS(spider({2, 0}), PreconditionError);
  CHECK_THROWS_AS(caterpillar(0, {}), PreconditionError);
  CHECK_THROWS_AS(caterpillar(2, {1}), PreconditionError);

  const auto spiders = all_spiders(8);
  const auto cats = all_caterpillars(8);
  std::set<CanonicalCode> codes;
  for (const auto& t : spiders) {
    CHECK(t.size() <= 8);
    CHECK(codes.insert(canonical_code(t)).second);
  }
  codes.clear();
  for (const auto& t : cats) CHECK(codes.insert(canonical_code(t)).second);
  // Every tree on 2..6 vertices is a caterpillar; the first exception has 7.
  std::size_t small = 0;
  for (const auto& t : cats) small += t.size() <= 6;
  CHECK(small == 1 + 1 + 2 + 3 + 6);
  std::size_t seven = 0;
  for (const auto& t : cats) seven += t.size() == 7;
  CHECK(seven == 10);
}

TEST_CASE("injection verdicts") {
  const auto a = check_injection_exhaustive(build_perfect(2, 4), 0, 3);
  CHECK(a.passed);
  CHECK(a.instances == count_classes(build_perfect(2, 4), 0, 7, 3).a);
  CHECK(check_injection_exhaustive(build_perfect(3, 3), 0, 2).passed);
  CHECK(check_injection_exhaustive(build_perfect(2, 3), 0, 4).instances == 1);  // {0, 4, 5, 6}
  const auto empty = check_injection_exhaustive(build_perfect(2, 3), 0, 5);
  CHECK(empty.passed);
  CHECK(empty.instances == 0);
  const auto all = check_injection_exhaustive(build_perfect(2, 4), 1);
  CHECK(all.passed);
  CHECK(!all.witness.has_value());
}

TEST_CASE("theorem verdicts") {
  CHECK(check_theorem_main(build_perfect(2, 4)).passed);
  CHECK(check_theorem_main(build_perfect(3, 3)).passed);
  const auto trivial = check_theorem_main(build_perfect(2, 1));
  CHECK(trivial.passed);
  CHECK(check_forest_theorem(forest_of({{2, 2}, {2, 3}})).passed);
  CHECK(check_forest_theorem(forest_of({{3, 2}, {2, 4}})).passed);
  CHECK(check_forest_theorem(forest_of({{2, 4}})).passed);
  CHECK_THROWS_AS(check_forest_theorem(Forest({parse_tree("3\n-1 0 1")})), PreconditionError);
}

TEST_CASE("hk reports") {
  for (const auto& r : check_hk(build_perfect(2, 3), 100)) CHECK(r.is_k_hk);
  const auto path = check_hk(parse_tree("4\n-1 0 1 2"), 100);
  CHECK(path.size() == 2);
  for (const auto& r : path) CHECK(r.is_k_hk);
  const auto vacuous = hk_report(parse_tree("4\n-1 0 1 2"), 4);
  CHECK(vacuous.is_k_hk);
  CHECK(vacuous.max_star_value == 0);
  // The star K_{1,3}: every leaf star beats the centre for k >= 2.
  const auto k2 = hk_report(spider({1, 1, 1}), 2);
  CHECK(k2.max_star_value == 2);
  CHECK(k2.best_leaf_value == 2);
  CHECK(k2.is_k_hk);
  // A bare edge: the root has degree one and counts as a leaf.
  CHECK(hk_report(parse_tree("2\n-1 0"), 1).is_k_hk);
}

TEST_CASE("hk_sweep is deterministic across worker counts") {
  const auto trees = enumerate_unlabeled_trees(7);
  const auto one = hk_sweep(trees, 3, 1);
  const auto four = hk_sweep(trees, 3, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(to_json(one[i]) == to_json(four[i]));
}

TEST_CASE("forest lemma verdicts, window and full agree") {
  const auto f = forest_of({{2, 2}, {3, 3}});
  const auto full = check_forest_lemma(f, 1, 7, ForestLemma::kArity, DomainMode::kFull);
  const auto window = check_forest_lemma(f, 1, 7, ForestLemma::kArity, DomainMode::kWindow);
  CHECK(full.passed);
  CHECK(window.passed);
  CHECK(window.instances <= full.instances);
  BigCount domain = 0;
  for (std::size_t k = 1; k <= independence_number(f); ++k) domain += count_classes(f, 1, 7, k).a;
  CHECK(BigCount(full.instances) == domain);
  CHECK(full.check == "arity-lemma/full");
  CHECK(window.check == "arity-lemma/window");
  const auto g = forest_of({{2, 2}, {2, 4}});
  CHECK(check_forest_lemma(g, 1, 10, ForestLemma::kLevel, DomainMode::kFull).passed);
  CHECK(check_forest_lemma(g, 1, 10, ForestLemma::kLevel, DomainMode::kWindow).passed);
  CHECK_THROWS_AS(check_forest_lemma(g, 1, 10, ForestLemma::kArity), PreconditionError);
}

TEST_CASE("pools and lemma instances") {
  const std::vector<PerfectShape> shapes{{2, 2}, {2, 3}, {3, 2}};
  const auto pool = perfect_forest_pool(shapes, 2, 2, 100);
  CHECK(pool.size() == 9);
  CHECK(perfect_forest_pool(shapes, 1, 3, 100).size() == 3 + 9 + 27);
  CHECK(perfect_forest_pool(shapes, 2, 2, 8).size() == 4);  // sizes 3 and 4 only
  const auto inst = lemma_instances(shapes, 100);
  for (const auto& i : inst) {
    const auto& t1 = i.forest.tree(i.forest.component(i.l1));
    const auto& t2 = i.forest.tree(i.forest.component(i.l2));
    if (i.lemma == ForestLemma::kArity)
      CHECK(t1.shape()->arity < t2.shape()->arity);
    else {
      CHECK(t1.shape()->arity == t2.shape()->arity);
      CHECK(t1.shape()->levels < t2.shape()->levels);
    }
  }
  CHECK(!inst.empty());
}

TEST_CASE("json records") {
  const auto v = check_theorem_main(build_perfect(2, 3));
  const auto j = nlohmann::json::parse(to_json(v));
  CHECK(j["check"] == "theorem-main");
  CHECK(j["passed"] == true);
  CHECK(j["witness"].is_null());
  CHECK(j.contains("instances"));
  const auto r = nlohmann::json::parse(to_json(hk_report(build_perfect(2, 3), 2)));
  CHECK(r["k"] == 2);
  CHECK(r["is_k_hk"] == true);
}
