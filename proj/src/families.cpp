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

#include "hkstar/families.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hkstar/canonical.hpp"
#include "hkstar/errors.hpp"

namespace hkstar {
namespace {

// Collects trees keyed by (size, canonical code) so the output is
// deduplicated and ordered.
class Catalog {
 public:
  void add(RootedTree t) {
    auto key = std::make_pair(t.size(), canonical_code(t).code);
    seen_.try_emplace(std::move(key), std::move(t));
  }
  std::vector<RootedTree> take() {
    std::vector<RootedTree> out;
    for (auto& [key, t] : seen_) out.push_back(std::move(t));
    return out;
  }

 private:
  std::map<std::pair<std::size_t, std::string>, RootedTree> seen_;
};

}  // namespace

RootedTree spider(const std::vector<int>& legs) {
  if (legs.empty()) throw PreconditionError("family.empty", "a spider needs at least one leg");
  std::vector<VertexId> parents{kNoVertex};
  for (int len : legs) {
    if (len < 1) throw PreconditionError("family.leg", "leg lengths must be positive");
    VertexId prev = 0;
    for (int i = 0; i < len; ++i) {
      parents.push_back(prev);
      prev = static_cast<VertexId>(parents.size() - 1);
    }
  }
  return RootedTree::from_parents(std::move(parents));
}

RootedTree caterpillar(int spine, const std::vector<int>& legs) {
  if (spine < 1) throw PreconditionError("family.empty", "a caterpillar needs a spine vertex");
  if (legs.size() != static_cast<std::size_t>(spine))
    throw PreconditionError("family.legs", "expected one leg count per spine vertex");
  std::vector<VertexId> parents;
  for (int i = 0; i < spine; ++i) parents.push_back(i == 0 ? kNoVertex : i - 1);
  for (int i = 0; i < spine; ++i) {
    if (legs[static_cast<std::size_t>(i)] < 0) throw PreconditionError("family.legs", "leg counts must be non-negative");
    for (int j = 0; j < legs[static_cast<std::size_t>(i)]; ++j) parents.push_back(i);
  }
  return RootedTree::from_parents(std::move(parents));
}

std::vector<RootedTree> all_spiders(std::size_t n_max) {
  Catalog cat;
  // Partitions of n - 1 into non-increasing leg lengths.
  std::vector<int> legs;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      cat.add(spider(legs));
      return;
    }
    for (int len = std::min(remaining, largest); len >= 1; --len) {
      legs.push_back(len);
      rec(remaining - len, len);
      legs.pop_back();
    }
  };
  for (std::size_t n = 2; n <= n_max; ++n) rec(static_cast<int>(n - 1), static_cast<int>(n - 1));
  return cat.take();
}

std::vector<RootedTree> all_caterpillars(std::size_t n_max) {
  Catalog cat;
  std::vector<int> legs;
  // Compositions of n - spine over the spine vertices (zeros allowed).
  std::function<void(int, int, int)> rec = [&](int spine, int index, int remaining) {
    if (index == spine - 1) {
      legs.push_back(remaining);
      cat.add(caterpillar(spine, legs));
      legs.pop_back();
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      legs.push_back(c);
      rec(spine, index + 1, remaining - c);
      legs.pop_back();
    }
  };
  for (std::size_t n = 2; n <= n_max; ++n)
    for (int spine = 1; spine <= static_cast<int>(n); ++spine) rec(spine, 0, static_cast<int>(n) - spine);
  return cat.take();
}

}  // namespace hkstar
