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

// Compiled with -mavx2 on x86-64 only; callers reach these through the
// dispatcher, which checks CPU support first.

#include <immintrin.h>

#include <bit>

#include "hkstar/kernels/kernels.hpp"

namespace hkstar::kernels {

void subset_scan_avx2(const ScanProblem& p, std::uint64_t begin, std::uint64_t end, std::span<std::uint64_t> hist) {
  const auto stride = static_cast<std::size_t>(p.pendant_count + 1);
  const __m256i lane_offsets = _mm256_setr_epi64x(0, 1, 2, 3);
  const __m256i zero = _mm256_setzero_si256();
  alignas(32) std::uint64_t conflict_out[4];
  alignas(32) std::uint64_t cover_out[4];

  std::uint64_t base = begin;
  for (; base + 4 <= end; base += 4) {
    const __m256i masks = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(base)), lane_offsets);
    __m256i conflict = zero;
    __m256i cover = zero;
    for (int i = 0; i < p.core_count; ++i) {
      const __m256i bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << i));
      const __m256i sel = _mm256_cmpeq_epi64(_mm256_and_si256(masks, bit), bit);
      const __m256i core = _mm256_set1_epi64x(static_cast<long long>(p.core_adjacency[static_cast<std::size_t>(i)]));
      const __m256i pend = _mm256_set1_epi64x(static_cast<long long>(p.pendant_adjacency[static_cast<std::size_t>(i)]));
      conflict = _mm256_or_si256(conflict, _mm256_and_si256(sel, core));
      cover = _mm256_or_si256(cover, _mm256_and_si256(sel, pend));
    }
    conflict = _mm256_and_si256(conflict, masks);
    _mm256_store_si256(reinterpret_cast<__m256i*>(conflict_out), conflict);
    _mm256_store_si256(reinterpret_cast<__m256i*>(cover_out), cover);
    for (int lane = 0; lane < 4; ++lane) {
      if (conflict_out[lane]) continue;
      const std::uint64_t mask = base + static_cast<std::uint64_t>(lane);
      auto chosen = static_cast<std::size_t>(std::popcount(mask));
      auto free_pendants = static_cast<std::size_t>(p.pendant_count - std::popcount(cover_out[lane]));
      ++hist[chosen * stride + free_pendants];
    }
  }
  if (base < end) subset_scan_scalar(p, base, end, hist);
}

void independence_flags_avx2(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> sets,
                             std::span<std::uint8_t> out) {
  const __m256i zero = _mm256_setzero_si256();
  alignas(32) std::uint64_t conflict_out[4];
  std::size_t j = 0;
  for (; j + 4 <= sets.size(); j += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets.data() + j));
    __m256i reach = zero;
    for (std::size_t v = 0; v < adjacency.size(); ++v) {
      const __m256i bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << v));
      const __m256i sel = _mm256_cmpeq_epi64(_mm256_and_si256(s, bit), bit);
      reach = _mm256_or_si256(reach, _mm256_and_si256(sel, _mm256_set1_epi64x(static_cast<long long>(adjacency[v]))));
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(conflict_out), _mm256_and_si256(reach, s));
    for (std::size_t lane = 0; lane < 4; ++lane) out[j + lane] = conflict_out[lane] == 0 ? 1 : 0;
  }
  if (j < sets.size()) independence_flags_scalar(adjacency, sets.subspan(j), out.subspan(j));
}

}  // namespace hkstar::kernels
