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

#include <bit>

#include "hkstar/kernels/kernels.hpp"

namespace hkstar::kernels {

void subset_scan_scalar(const ScanProblem& p, std::uint64_t begin, std::uint64_t end, std::span<std::uint64_t> hist) {
  const auto stride = static_cast<std::size_t>(p.pendant_count + 1);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::uint64_t conflict = 0, cover = 0;
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
      auto i = static_cast<std::size_t>(std::countr_zero(bits));
      conflict |= p.core_adjacency[i];
      cover |= p.pendant_adjacency[i];
    }
    if (conflict & mask) continue;
    auto chosen = static_cast<std::size_t>(std::popcount(mask));
    auto free_pendants = static_cast<std::size_t>(p.pendant_count - std::popcount(cover));
    ++hist[chosen * stride + free_pendants];
  }
}

void independence_flags_scalar(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> sets,
                               std::span<std::uint8_t> out) {
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const std::uint64_t s = sets[j];
    std::uint64_t reach = 0;
    for (std::uint64_t bits = s; bits; bits &= bits - 1) reach |= adjacency[static_cast<std::size_t>(std::countr_zero(bits))];
    out[j] = (reach & s) == 0 ? 1 : 0;
  }
}

}  // namespace hkstar::kernels
