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

#include <cstddef>
#include <vector>

#include "hkstar/tree.hpp"

namespace hkstar {

/// Center 0 with one path per entry of `legs` (each length >= 1). Leg
/// vertices are numbered leg by leg, outward from the center.
RootedTree spider(const std::vector<int>& legs);

/// Path 0..spine-1 rooted at 0; spine vertex i carries legs[i] pendant
/// leaves, numbered after the spine in spine order.
RootedTree caterpillar(int spine, const std::vector<int>& legs);

/// One representative per isomorphism class, 2 <= n <= n_max, ordered by
/// size and then canonical code.
std::vector<RootedTree> all_spiders(std::size_t n_max);
std::vector<RootedTree> all_caterpillars(std::size_t n_max);

}  // namespace hkstar
