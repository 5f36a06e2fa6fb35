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

#include <cmath>

#include "hkstar/errors.hpp"
#include "hkstar/tree.hpp"

using namespace hkstar;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_tree(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("build_perfect shapes") {
  auto t = build_perfect(2, 3);
  CHECK(t.size() == 7);
  int leaves = 0;
  for (VertexId v = 0; v < 7; ++v)
    if (t.is_leaf(v)) {
      ++leaves;
      CHECK(t.depth(v) == 2);
    }
  CHECK(leaves == 4);

  auto s = build_perfect(3, 2);
  CHECK(s.size() == 4);
  CHECK(s.children(0).size() == 3);

  auto one = build_perfect(2, 1);
  CHECK(one.size() == 1);
  CHECK(one.is_leaf(0));
  CHECK(one.root() == 0);
  CHECK(one.leftmost_leaf() == 0);
}

TEST_CASE("build_perfect structure scan") {
  for (int r = 2; r <= 4; ++r)
    for (int h = 1; h <= 4; ++h) {
      auto t = build_perfect(r, h);
      REQUIRE(t.size() == perfect_size(r, h));
      CHECK(t.shape() == PerfectShape{r, h});
      std::size_t leaves = 0;
      for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v) {
        if (t.is_leaf(v)) {
          ++leaves;
          CHECK(t.depth(v) == h - 1);
        } else {
          CHECK(t.children(v).size() == static_cast<std::size_t>(r));
          for (int j = 1; j <= r; ++j) CHECK(t.child(v, j) == r * v + j);
        }
      }
      CHECK(leaves == static_cast<std::size_t>(std::pow(r, h - 1)));
      const VertexId expected_leaf = (static_cast<VertexId>(std::pow(r, h - 1)) - 1) / (r - 1);
      CHECK(t.leftmost_leaf() == expected_leaf);
      const auto path = leftmost_path(t, t.root());
      CHECK(path.size() == static_cast<std::size_t>(h));
      CHECK(path.back() == expected_leaf);
    }
}

TEST_CASE("build_perfect rejects degenerate shapes") {
  CHECK_THROWS_AS(build_perfect(1, 3), PreconditionError);
  CHECK_THROWS_AS(build_perfect(2, 0), PreconditionError);
  CHECK_NOTHROW(build_perfect(1, 1));
}

TEST_CASE("parse_tree accepts the file format and shorthand") {
  auto star = parse_tree("3\n-1 0 0\n");
  CHECK(star.size() == 3);
  CHECK(star.children(0).size() == 2);
  CHECK(parse_tree("perfect:2:4") == build_perfect(2, 4));
  CHECK(parse_tree("# comment\n2\n# another\n-1 0\n").size() == 2);
  auto shuffled = parse_tree("4\n2 2 -1 1\n");
  CHECK(shuffled.root() == 2);
  CHECK(shuffled.children(2)[0] == 0);
  CHECK(shuffled.children(2)[1] == 1);
  CHECK_FALSE(shuffled.is_perfect());
}

TEST_CASE("parse_tree reports errors with line numbers") {
  CHECK(parse_error_line("3\n-1 0 1 0") == 2);
  CHECK(parse_error_line("3\n-1 -1 0") == 2);
  CHECK(parse_error_line("3\n-1 0 7") == 2);
  CHECK(parse_error_line("3\n-1 x 0") == 2);
  CHECK(parse_error_line("x\n-1 0 0") == 1);
  CHECK(parse_error_line("3\n-1 2 1") == 2);  // 1 and 2 form a cycle
  CHECK(parse_error_line("# only\n4\n1 0 3 2") == 3);
}

TEST_CASE("serialize round trip") {
  for (const auto& t : {build_perfect(3, 3), parse_tree("5\n3 3 -1 2 0\n"), build_perfect(2, 1)})
    CHECK(parse_tree(serialize_tree(t)).parents() == t.parents());
}

TEST_CASE("leftmost_path") {
  auto t3 = build_perfect(2, 3);
  CHECK(leftmost_path(t3, 0) == std::vector<VertexId>{0, 1, 3});
  CHECK(leftmost_path(t3, 3) == std::vector<VertexId>{3});
  CHECK(leftmost_path(build_perfect(2, 4), 0) == std::vector<VertexId>{0, 1, 3, 7});
  CHECK_THROWS_AS(leftmost_path(t3, 2), PreconditionError);
  CHECK(leftmost_path_vertex_at_depth(t3, 1) == 1);
}

TEST_CASE("forest offsets and navigation") {
  Forest f({build_perfect(2, 2), build_perfect(3, 2)});
  CHECK(f.size() == 7);
  CHECK(f.tree_count() == 2);
  CHECK(f.offset(1) == 3);
  CHECK(f.root(1) == 3);
  CHECK(f.leftmost_leaf(1) == 4);
  CHECK(f.component(5) == 1);
  CHECK(f.local(5) == 2);
  CHECK(f.parent(6) == 3);
  CHECK(f.child(3, 3) == 6);
  CHECK(f.adjacent(3, 4));
  CHECK_FALSE(f.adjacent(0, 3));
  CHECK(f.subtree_levels(3) == 2);
  CHECK(f.subtree_levels(4) == 1);
  CHECK(f.is_independent(VertexSet(7, {1, 2, 4})));
  CHECK_FALSE(f.is_independent(VertexSet(7, {3, 4})));
}

TEST_CASE("forest loading") {
  auto f = load_forest("perfect:2:2+perfect:3:2");
  CHECK(f.size() == 7);
  auto g = parse_forest("3\n-1 0 0\n\nperfect:2:2\n");
  CHECK(g.tree_count() == 2);
  CHECK_THROWS_AS(parse_forest("3\n-1 0 0\n\n\nperfect:2:2\n"), ParseError);
  CHECK_THROWS_AS(parse_forest(""), ParseError);
}

TEST_CASE("vertex set helpers") {
  VertexSet s(70, {69, 3, 0});
  CHECK(s.size() == 3);
  CHECK(format_ids(s) == "0,3,69");
  CHECK(parse_id_list(" 1, 4 ,7") == std::vector<VertexId>{1, 4, 7});
  CHECK(parse_id_list("").empty());
  CHECK_THROWS_AS(parse_id_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_id_list("1,a"), ParseError);
  s.erase(69);
  CHECK(s.ids() == std::vector<VertexId>{0, 3});
  CHECK(VertexSet(5, {1, 2}) < VertexSet(5, {1, 3}));
}
