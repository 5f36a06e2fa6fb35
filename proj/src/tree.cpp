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

#include "hkstar/tree.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "hkstar/errors.hpp"

namespace hkstar {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Detects a perfect shape: every internal vertex has the same number (>= 2) of
// children and all leaves sit at one depth.
std::optional<PerfectShape> detect_shape(const RootedTree& t) {
  if (t.size() == 1) return PerfectShape{2, 1};
  int arity = static_cast<int>(t.children(t.root()).size());
  if (arity < 2) return std::nullopt;
  int leaf_depth = -1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto v = static_cast<VertexId>(i);
    auto c = t.children(v).size();
    if (c == 0) {
      if (leaf_depth < 0) leaf_depth = t.depth(v);
      if (t.depth(v) != leaf_depth) return std::nullopt;
    } else if (static_cast<int>(c) != arity) {
      return std::nullopt;
    }
  }
  return PerfectShape{arity, leaf_depth + 1};
}

std::optional<PerfectShape> parse_perfect_shorthand(std::string_view s, int line) {
  s = trim(s);
  constexpr std::string_view prefix = "perfect:";
  if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto rest = s.substr(prefix.size());
  auto colon = rest.find(':');
  long long r = 0, h = 0;
  if (colon == std::string_view::npos || !parse_int(rest.substr(0, colon), r) ||
      !parse_int(rest.substr(colon + 1), h))
    throw ParseError(line, "malformed shorthand '" + std::string(s) + "', expected perfect:<r>:<h>");
  if (h < 1 || h > 64 || r < 0 || r > 1'000'000) throw ParseError(line, "shorthand parameters out of range");
  return PerfectShape{static_cast<int>(r), static_cast<int>(h)};
}

struct Line {
  int number;
  std::string_view text;
};

// Non-comment lines, blank lines kept (forest blocks need them).
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t i = 0;
  while (i <= text.size()) {
    auto j = text.find('\n', i);
    if (j == std::string_view::npos) j = text.size();
    ++number;
    auto line = trim(text.substr(i, j - i));
    if (line.empty() || line.front() != '#') out.push_back({number, line});
    if (j == text.size()) break;
    i = j + 1;
  }
  return out;
}

RootedTree parse_block(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "empty tree description");
  if (auto shape = parse_perfect_shorthand(lines[0].text, lines[0].number)) {
    if (lines.size() > 1) throw ParseError(lines[1].number, "unexpected content after shorthand");
    try {
      return build_perfect(shape->arity, shape->levels);
    } catch (const PreconditionError& e) {
      throw ParseError(lines[0].number, e.what());
    }
  }
  long long n = 0;
  if (!parse_int(lines[0].text, n)) throw ParseError(lines[0].number, "malformed vertex count '" + std::string(lines[0].text) + "'");
  if (n < 1) throw ParseError(lines[0].number, "vertex count must be positive");
  if (lines.size() < 2) throw ParseError(lines[0].number, "missing parent array line");
  if (lines.size() > 2) throw ParseError(lines[2].number, "unexpected content after parent array");
  const Line& pl = lines[1];
  auto tokens = split_ws(pl.text);
  if (static_cast<long long>(tokens.size()) != n)
    throw ParseError(pl.number, "length mismatch: expected " + std::to_string(n) + " parents, found " +
                                    std::to_string(tokens.size()));
  std::vector<VertexId> parents;
  parents.reserve(tokens.size());
  int roots = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    long long p = 0;
    if (!parse_int(tokens[i], p)) throw ParseError(pl.number, "malformed integer '" + std::string(tokens[i]) + "'");
    if (p == -1) {
      if (++roots > 1) throw ParseError(pl.number, "multiple roots (second at vertex " + std::to_string(i) + ")");
    } else if (p < 0 || p >= n) {
      throw ParseError(pl.number, "out-of-range parent " + std::to_string(p) + " for vertex " + std::to_string(i));
    }
    parents.push_back(static_cast<VertexId>(p));
  }
  try {
    return RootedTree::from_parents(std::move(parents));
  } catch (const PreconditionError& e) {
    throw ParseError(pl.number, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

RootedTree RootedTree::from_parents(std::vector<VertexId> parents) {
  const std::size_t n = parents.size();
  if (n == 0) throw PreconditionError("tree.structure", "a tree needs at least one vertex");
  RootedTree t;
  t.parent_ = std::move(parents);
  std::vector<std::size_t> counts(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    VertexId p = t.parent_[i];
    if (p == kNoVertex) {
      if (t.root_ != kNoVertex) throw PreconditionError("tree.structure", "multiple roots");
      t.root_ = static_cast<VertexId>(i);
      continue;
    }
    if (p < 0 || static_cast<std::size_t>(p) >= n)
      throw PreconditionError("tree.structure", "out-of-range parent " + std::to_string(p) + " for vertex " + std::to_string(i));
    if (static_cast<std::size_t>(p) == i) throw PreconditionError("tree.structure", "vertex " + std::to_string(i) + " is its own parent");
    ++counts[static_cast<std::size_t>(p) + 1];
  }
  if (t.root_ == kNoVertex) throw PreconditionError("tree.structure", "no root (cycle through every vertex)");
  t.child_begin_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) t.child_begin_[i + 1] = t.child_begin_[i] + counts[i + 1];
  t.child_list_.assign(n - 1, 0);
  std::vector<std::size_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
  // Ascending i gives ascending child order.
  for (std::size_t i = 0; i < n; ++i)
    if (t.parent_[i] != kNoVertex) t.child_list_[fill[static_cast<std::size_t>(t.parent_[i])]++] = static_cast<VertexId>(i);

  t.depth_.assign(n, -1);
  t.bfs_.reserve(n);
  t.bfs_.push_back(t.root_);
  t.depth_[static_cast<std::size_t>(t.root_)] = 0;
  for (std::size_t head = 0; head < t.bfs_.size(); ++head) {
    VertexId v = t.bfs_[head];
    for (VertexId c : t.children(v)) {
      t.depth_[static_cast<std::size_t>(c)] = t.depth_[static_cast<std::size_t>(v)] + 1;
      t.bfs_.push_back(c);
    }
  }
  if (t.bfs_.size() != n) throw PreconditionError("tree.structure", "cycle: not every vertex is reachable from the root");
  t.shape_ = detect_shape(t);
  return t;
}

VertexId RootedTree::leftmost_leaf() const {
  VertexId v = root_;
  while (!is_leaf(v)) v = children(v).front();
  return v;
}

std::vector<std::pair<VertexId, VertexId>> RootedTree::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(size() ? size() - 1 : 0);
  for (std::size_t i = 0; i < size(); ++i)
    if (parent_[i] != kNoVertex) out.emplace_back(parent_[i], static_cast<VertexId>(i));
  return out;
}

std::size_t perfect_size(int arity, int levels) {
  std::size_t total = 0, layer = 1;
  for (int i = 0; i < levels; ++i) {
    total += layer;
    layer *= static_cast<std::size_t>(arity);
  }
  return total;
}

RootedTree build_perfect(int arity, int levels) {
  if (levels < 1) throw PreconditionError("perfect.levels", "level count must be at least 1, got " + std::to_string(levels));
  if (levels >= 2 && arity < 2) throw PreconditionError("perfect.arity", "arity must be at least 2, got " + std::to_string(arity));
  const std::size_t n = levels == 1 ? 1 : perfect_size(arity, levels);
  if (n > (std::size_t{1} << 26)) throw PreconditionError("perfect.size", "perfect tree too large");
  std::vector<VertexId> parents(n);
  parents[0] = kNoVertex;
  for (std::size_t i = 1; i < n; ++i) parents[i] = static_cast<VertexId>((i - 1) / static_cast<std::size_t>(arity));
  RootedTree t = RootedTree::from_parents(std::move(parents));
  t.shape_ = PerfectShape{levels == 1 ? std::max(arity, 2) : arity, levels};
  return t;
}

RootedTree parse_tree(const std::string& text) {
  auto lines = content_lines(text);
  std::erase_if(lines, [](const Line& l) { return l.text.empty(); });
  return parse_block(lines);
}

std::string serialize_tree(const RootedTree& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(t.parents()[i]);
  }
  out += '\n';
  return out;
}

std::vector<VertexId> leftmost_path(const RootedTree& t, VertexId v) {
  if (!t.contains(v)) throw PreconditionError("leftmost_path.vertex", "vertex " + std::to_string(v) + " out of range");
  std::vector<VertexId> up;
  for (VertexId x = t.leftmost_leaf(); x != kNoVertex; x = t.parent(x)) {
    up.push_back(x);
    if (x == v) {
      std::reverse(up.begin(), up.end());
      return up;
    }
  }
  throw PreconditionError("leftmost_path.vertex", "vertex " + std::to_string(v) + " is not an ancestor of the leftmost leaf");
}

VertexId leftmost_path_vertex_at_depth(const RootedTree& t, int depth) {
  VertexId x = t.root();
  for (int d = 0; d < depth; ++d) {
    if (t.is_leaf(x)) throw PreconditionError("leftmost_path.depth", "depth " + std::to_string(depth) + " exceeds tree height");
    x = t.children(x).front();
  }
  return x;
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::size_t total = 0;
  for (const auto& t : trees_) {
    offsets_.push_back(total);
    total += t.size();
  }
  component_.resize(total);
  parent_.resize(total);
  depth_.resize(total);
  child_begin_.assign(total + 1, 0);
  child_list_.reserve(total);
  for (std::size_t c = 0; c < trees_.size(); ++c) {
    const auto& t = trees_[c];
    const auto off = static_cast<VertexId>(offsets_[c]);
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto g = offsets_[c] + i;
      auto v = static_cast<VertexId>(i);
      component_[g] = c;
      parent_[g] = t.parent(v) == kNoVertex ? kNoVertex : t.parent(v) + off;
      depth_[g] = t.depth(v);
      child_begin_[g] = child_list_.size();
      for (VertexId ch : t.children(v)) child_list_.push_back(ch + off);
    }
  }
  child_begin_[total] = child_list_.size();
}

int Forest::subtree_levels(VertexId g) const {
  const auto& shape = trees_[component(g)].shape();
  if (!shape) throw PreconditionError("forest.perfect", "component of vertex " + std::to_string(g) + " is not perfect");
  return shape->levels - depth(g);
}

bool Forest::is_independent(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](VertexId v) {
    if (ok && parent(v) != kNoVertex && s.contains(parent(v))) ok = false;
  });
  return ok;
}

Forest parse_forest(const std::string& text) {
  auto lines = content_lines(text);
  std::vector<RootedTree> trees;
  std::vector<Line> block;
  int blank_run = 0;
  auto flush = [&] {
    if (!block.empty()) trees.push_back(parse_block(block));
    block.clear();
  };
  for (const auto& l : lines) {
    if (l.text.empty()) {
      ++blank_run;
      flush();
      continue;
    }
    if (blank_run > 1 && !trees.empty()) throw ParseError(l.number, "tree blocks must be separated by exactly one blank line");
    blank_run = 0;
    block.push_back(l);
  }
  flush();
  if (trees.empty()) throw ParseError(0, "forest has no trees");
  return Forest(std::move(trees));
}

RootedTree load_tree(const std::string& spec) {
  if (parse_perfect_shorthand(spec, 0)) return parse_tree(spec);
  return parse_tree(read_file(spec));
}

Forest load_forest(const std::string& spec) {
  if (spec.starts_with("perfect:")) {
    std::vector<RootedTree> trees;
    std::size_t i = 0;
    while (i <= spec.size()) {
      auto j = spec.find('+', i);
      if (j == std::string::npos) j = spec.size();
      trees.push_back(parse_tree(spec.substr(i, j - i)));
      i = j + 1;
    }
    return Forest(std::move(trees));
  }
  return parse_forest(read_file(spec));
}

}  // namespace hkstar
