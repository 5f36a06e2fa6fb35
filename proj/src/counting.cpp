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

#include "hkstar/counting.hpp"

#include <algorithm>
#include <sstream>

#include "hkstar/errors.hpp"
#include "hkstar/kernels/kernels.hpp"

namespace hkstar {
namespace {

const BigCount kZero = 0;

enum class Mark : unsigned char { kFree, kForced, kForbidden };

std::vector<Mark> marks_for(std::size_t n, const ProfileConstraints& c, VertexId offset = 0) {
  std::vector<Mark> m(n, Mark::kFree);
  for (VertexId v : c.forced) {
    VertexId local = v - offset;
    if (local < 0 || static_cast<std::size_t>(local) >= n) continue;
    m[static_cast<std::size_t>(local)] = Mark::kForced;
  }
  for (VertexId v : c.forbidden) {
    VertexId local = v - offset;
    if (local < 0 || static_cast<std::size_t>(local) >= n) continue;
    if (m[static_cast<std::size_t>(local)] == Mark::kForced)
      throw PreconditionError("profile.constraints", "vertex " + std::to_string(v) + " is both forced and forbidden");
    m[static_cast<std::size_t>(local)] = Mark::kForbidden;
  }
  return m;
}

void check_range(std::size_t n, const ProfileConstraints& c) {
  for (const auto* list : {&c.forced, &c.forbidden})
    for (VertexId v : *list)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw PreconditionError("profile.vertex", "vertex " + std::to_string(v) + " out of range");
}

CountPolynomial shifted(const CountPolynomial& p) {
  std::vector<BigCount> c(p.length() + 1);
  for (std::size_t i = 0; i < p.length(); ++i) c[i + 1] = p[i];
  return CountPolynomial(std::move(c));
}

// Unsized DP; callers trim to the independence number.
CountPolynomial tree_dp(const RootedTree& t, const std::vector<Mark>& marks) {
  const std::size_t n = t.size();
  std::vector<CountPolynomial> in(n), out(n);
  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto v = static_cast<std::size_t>(*it);
    CountPolynomial with_v(std::vector<BigCount>{1});
    CountPolynomial without_v(std::vector<BigCount>{1});
    for (VertexId c : t.children(*it)) {
      auto ci = static_cast<std::size_t>(c);
      with_v = with_v * out[ci];
      without_v = without_v * (in[ci] + out[ci]);
      in[ci] = {};
      out[ci] = {};
    }
    in[v] = marks[v] == Mark::kForbidden ? CountPolynomial() : shifted(with_v);
    out[v] = marks[v] == Mark::kForced ? CountPolynomial() : std::move(without_v);
  }
  auto r = static_cast<std::size_t>(t.root());
  return in[r] + out[r];
}

struct Searcher {
  const Forest& f;
  VertexSet current;

  // True when x has no neighbour in `current` among ids below x.
  bool compatible(VertexId x) const {
    VertexId p = f.parent(x);
    if (p != kNoVertex && p < x && current.contains(p)) return false;
    for (VertexId c : f.children(x))
      if (c < x && current.contains(c)) return false;
    return true;
  }
};

}  // namespace

const BigCount& CountPolynomial::operator[](std::size_t k) const { return k < c_.size() ? c_[k] : kZero; }

int CountPolynomial::degree() const noexcept {
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return CountPolynomial();
  std::vector<BigCount> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return CountPolynomial(std::move(c));
}

CountPolynomial operator+(const CountPolynomial& a, const CountPolynomial& b) {
  std::vector<BigCount> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return CountPolynomial(std::move(c));
}

std::string CountPolynomial::to_string() const {
  std::ostringstream ss;
  ss << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) ss << (i ? ", " : "") << c_[i];
  ss << ']';
  return ss.str();
}

std::size_t independence_number(const RootedTree& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> in(n, 1), out(n, 0);
  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto v = static_cast<std::size_t>(*it);
    for (VertexId c : t.children(*it)) {
      auto ci = static_cast<std::size_t>(c);
      in[v] += out[ci];
      out[v] += std::max(in[ci], out[ci]);
    }
  }
  auto r = static_cast<std::size_t>(t.root());
  return std::max(in[r], out[r]);
}

std::size_t independence_number(const Forest& f) {
  std::size_t total = 0;
  for (const auto& t : f.trees()) total += independence_number(t);
  return total;
}

CountPolynomial independence_profile(const RootedTree& t, const ProfileConstraints& constraints) {
  check_range(t.size(), constraints);
  auto p = tree_dp(t, marks_for(t.size(), constraints));
  p.resize(independence_number(t) + 1);
  return p;
}

CountPolynomial independence_profile(const RootedTree& t, std::optional<VertexId> forced,
                                     const std::optional<VertexSet>& forbidden) {
  ProfileConstraints c;
  if (forced) c.forced.push_back(*forced);
  if (forbidden) c.forbidden = forbidden->ids();
  return independence_profile(t, c);
}

CountPolynomial independence_profile(const Forest& f, const ProfileConstraints& constraints) {
  check_range(f.size(), constraints);
  CountPolynomial total(std::vector<BigCount>{1});
  for (std::size_t i = 0; i < f.tree_count(); ++i) {
    const auto& t = f.tree(i);
    total = total * tree_dp(t, marks_for(t.size(), constraints, static_cast<VertexId>(f.offset(i))));
  }
  total.resize(independence_number(f) + 1);
  return total;
}

CountPolynomial star_profile(const Forest& f, VertexId v) {
  return independence_profile(f, ProfileConstraints{{v}, {}});
}

BigCount count_star(const RootedTree& t, VertexId v, std::size_t k) {
  return independence_profile(t, ProfileConstraints{{v}, {}})[k];
}

BigCount count_star(const Forest& f, VertexId v, std::size_t k) { return star_profile(f, v)[k]; }

ClassSizes count_classes(const Forest& f, VertexId v, VertexId l, std::size_t k) {
  if (v == l) throw PreconditionError("classes.distinct", "v and l must differ");
  ClassSizes out;
  out.a = independence_profile(f, ProfileConstraints{{v}, {l}})[k];
  out.b = independence_profile(f, ProfileConstraints{{l}, {v}})[k];
  out.c = independence_profile(f, ProfileConstraints{{v, l}, {}})[k];
  return out;
}

ClassSizes count_classes(const RootedTree& t, VertexId v, VertexId l, std::size_t k) {
  return count_classes(Forest::single(t), v, l, k);
}

void for_each_independent_set(const Forest& f, std::size_t k, const std::function<bool(const VertexSet&)>& visit) {
  const auto n = static_cast<VertexId>(f.size());
  Searcher s{f, VertexSet(f.size())};
  bool stop = false;
  auto rec = [&](auto&& self, VertexId start, std::size_t need) -> void {
    if (stop) return;
    if (need == 0) {
      if (!visit(s.current)) stop = true;
      return;
    }
    for (VertexId x = start; x + static_cast<VertexId>(need) <= n && !stop; ++x) {
      if (!s.compatible(x)) continue;
      s.current.insert(x);
      self(self, x + 1, need - 1);
      s.current.erase(x);
    }
  };
  rec(rec, 0, k);
}

std::vector<VertexSet> enumerate_independent_sets(const Forest& f, std::size_t k) {
  std::vector<VertexSet> out;
  for_each_independent_set(f, k, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<VertexSet> enumerate_independent_sets(const RootedTree& t, std::size_t k) {
  return enumerate_independent_sets(Forest::single(t), k);
}

void for_each_constrained_independent_set(const Forest& f, const VertexSet& required, const VertexSet& excluded,
                                          const std::function<void(const VertexSet&)>& visit) {
  const auto n = static_cast<VertexId>(f.size());
  Searcher s{f, VertexSet(f.size())};
  auto rec = [&](auto&& self, VertexId x) -> void {
    if (x == n) {
      visit(s.current);
      return;
    }
    if (!excluded.contains(x) && s.compatible(x)) {
      s.current.insert(x);
      self(self, x + 1);
      s.current.erase(x);
    }
    if (!required.contains(x)) self(self, x + 1);
  };
  rec(rec, 0);
}

BigCount binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

CountPolynomial brute_force_profile(const Forest& f) {
  const std::size_t n = f.size();
  std::vector<int> degree(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (f.parent(static_cast<VertexId>(v)) != kNoVertex) {
      ++degree[v];
      ++degree[static_cast<std::size_t>(f.parent(static_cast<VertexId>(v)))];
    }
  auto neighbour_of_leaf = [&](std::size_t v) {
    auto g = static_cast<VertexId>(v);
    return f.parent(g) != kNoVertex ? f.parent(g) : f.children(g).front();
  };
  // Pendants: degree-1 vertices whose neighbour has degree >= 2.
  std::vector<int> core_index(n, -1), pendant_index(n, -1);
  int cores = 0, pendants = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1 && degree[static_cast<std::size_t>(neighbour_of_leaf(v))] >= 2) pendant_index[v] = pendants++;
    else core_index[v] = cores++;
  }
  if (cores > 30) throw PreconditionError("oracle.size", "subset scan core has " + std::to_string(cores) + " vertices (max 30)");
  if (pendants > 64) throw PreconditionError("oracle.size", "subset scan has " + std::to_string(pendants) + " pendants (max 64)");

  std::vector<std::uint64_t> core_adj(static_cast<std::size_t>(cores), 0), pend_adj(static_cast<std::size_t>(cores), 0);
  for (std::size_t v = 0; v < n; ++v) {
    VertexId p = f.parent(static_cast<VertexId>(v));
    if (p == kNoVertex) continue;
    auto a = v, b = static_cast<std::size_t>(p);
    if (core_index[a] >= 0 && core_index[b] >= 0) {
      core_adj[static_cast<std::size_t>(core_index[a])] |= std::uint64_t{1} << core_index[b];
      core_adj[static_cast<std::size_t>(core_index[b])] |= std::uint64_t{1} << core_index[a];
    } else if (pendant_index[a] >= 0) {
      pend_adj[static_cast<std::size_t>(core_index[b])] |= std::uint64_t{1} << pendant_index[a];
    } else {
      pend_adj[static_cast<std::size_t>(core_index[a])] |= std::uint64_t{1} << pendant_index[b];
    }
  }
  kernels::ScanProblem problem{cores, pendants, core_adj, pend_adj};
  std::vector<std::uint64_t> hist(problem.histogram_size(), 0);
  kernels::subset_scan(problem, 0, std::uint64_t{1} << cores, hist);

  std::vector<BigCount> coeff(n + 1);
  const auto stride = static_cast<std::size_t>(pendants + 1);
  for (std::size_t a = 0; a <= static_cast<std::size_t>(cores); ++a)
    for (std::size_t free = 0; free < stride; ++free) {
      std::uint64_t count = hist[a * stride + free];
      if (!count) continue;
      for (std::size_t extra = 0; extra <= free; ++extra) coeff[a + extra] += BigCount(count) * binomial(free, extra);
    }
  CountPolynomial p(std::move(coeff));
  p.resize(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  return p;
}

CountPolynomial brute_force_profile(const RootedTree& t) { return brute_force_profile(Forest::single(t)); }

}  // namespace hkstar
