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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hkstar/tree.hpp"
#include "hkstar/vertex_set.hpp"

namespace hkstar {

using BigCount = boost::multiprecision::cpp_int;

/// Coefficient k counts independent sets of size k (under whatever
/// constraints produced it). Reads past the end are zero.
class CountPolynomial {
 public:
  CountPolynomial() = default;
  explicit CountPolynomial(std::vector<BigCount> coefficients) : c_(std::move(coefficients)) {}

  std::size_t length() const noexcept { return c_.size(); }
  const BigCount& operator[](std::size_t k) const;
  const std::vector<BigCount>& coefficients() const noexcept { return c_; }
  /// Highest index with a nonzero coefficient, or -1 for the zero polynomial.
  int degree() const noexcept;

  /// Pads with zeros or drops trailing entries to exactly `n` coefficients.
  void resize(std::size_t n) { c_.resize(n); }

  friend CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b);
  friend CountPolynomial operator+(const CountPolynomial& a, const CountPolynomial& b);
  friend bool operator==(const CountPolynomial&, const CountPolynomial&) = default;

  /// "[1, 3, 1]"
  std::string to_string() const;

 private:
  std::vector<BigCount> c_;
};

/// Sizes of the three families for a pair (v, l) at one k:
///   a: v in I, l not in I    b: l in I, v not in I    c: both.
struct ClassSizes {
  BigCount a, b, c;
  friend bool operator==(const ClassSizes&, const ClassSizes&) = default;
};

/// Membership constraints for the DP: forced vertices must be in the set,
/// forbidden ones must not be.
struct ProfileConstraints {
  std::vector<VertexId> forced;
  std::vector<VertexId> forbidden;
};

/// Largest independent set size.
std::size_t independence_number(const RootedTree& t);
std::size_t independence_number(const Forest& f);

/// Two-state tree DP (vertex in / vertex out) with polynomial products over
/// children; constraints act as state restrictions. The result has
/// independence_number(t) + 1 coefficients. Throws PreconditionError when a
/// vertex is both forced and forbidden or out of range.
CountPolynomial independence_profile(const RootedTree& t, const ProfileConstraints& constraints = {});
CountPolynomial independence_profile(const RootedTree& t, std::optional<VertexId> forced,
                                     const std::optional<VertexSet>& forbidden = std::nullopt);
/// Product of per-component profiles; constraint ids are global.
CountPolynomial independence_profile(const Forest& f, const ProfileConstraints& constraints = {});

/// |I^k(v)|: size-k independent sets containing v.
BigCount count_star(const RootedTree& t, VertexId v, std::size_t k);
BigCount count_star(const Forest& f, VertexId v, std::size_t k);
/// Forced profile of v (all k at once).
CountPolynomial star_profile(const Forest& f, VertexId v);

/// Throws PreconditionError when v == l.
ClassSizes count_classes(const RootedTree& t, VertexId v, VertexId l, std::size_t k);
ClassSizes count_classes(const Forest& f, VertexId v, VertexId l, std::size_t k);

/// Visits every independent set of size exactly k in lexicographic order of
/// sorted id lists. The visitor may return false to stop early.
void for_each_independent_set(const Forest& f, std::size_t k, const std::function<bool(const VertexSet&)>& visit);

/// All size-k independent sets, lexicographic.
std::vector<VertexSet> enumerate_independent_sets(const RootedTree& t, std::size_t k);
std::vector<VertexSet> enumerate_independent_sets(const Forest& f, std::size_t k);

/// Visits every independent set of any size that contains all of `required`
/// and none of `excluded`. Order: include-before-exclude depth-first over ids.
void for_each_constrained_independent_set(const Forest& f, const VertexSet& required, const VertexSet& excluded,
                                          const std::function<void(const VertexSet&)>& visit);

/// Independent-set profile by brute-force subset scan: enumerates independent
/// subsets of the non-pendant vertices and accounts for pendant leaves with
/// binomials. Independent of the tree DP. Throws PreconditionError when the
/// core exceeds 30 vertices or there are more than 64 pendants.
CountPolynomial brute_force_profile(const Forest& f);
CountPolynomial brute_force_profile(const RootedTree& t);

/// C(n, k) as a big integer; zero when k > n.
BigCount binomial(std::size_t n, std::size_t k);

}  // namespace hkstar
