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

#include <bit>
#include <random>

#include "hkstar/kernels/kernels.hpp"

using namespace hkstar::kernels;

namespace {

struct RandomProblem {
  std::vector<std::uint64_t> core, pendant;
  ScanProblem view;
};

RandomProblem make_problem(int core_count, int pendant_count, std::mt19937_64& rng) {
  RandomProblem p;
  p.core.assign(static_cast<std::size_t>(core_count), 0);
  p.pendant.assign(static_cast<std::size_t>(core_count), 0);
  std::bernoulli_distribution edge(0.2);
  for (int i = 0; i < core_count; ++i)
    for (int j = i + 1; j < core_count; ++j)
      if (edge(rng)) {
        p.core[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        p.core[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
  std::uniform_int_distribution<int> owner(0, core_count - 1);
  for (int q = 0; q < pendant_count; ++q) p.pendant[static_cast<std::size_t>(owner(rng))] |= std::uint64_t{1} << q;
  p.view = ScanProblem{core_count, pendant_count, p.core, p.pendant};
  return p;
}

// Straight-line definition of the histogram.
std::vector<std::uint64_t> reference_scan(const RandomProblem& p, std::uint64_t begin, std::uint64_t end) {
  std::vector<std::uint64_t> hist(p.view.histogram_size(), 0);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    bool ok = true;
    std::uint64_t blocked = 0;
    for (int i = 0; i < p.view.core_count; ++i)
      if (mask >> i & 1) {
        if (p.core[static_cast<std::size_t>(i)] & mask) ok = false;
        blocked |= p.pendant[static_cast<std::size_t>(i)];
      }
    if (!ok) continue;
    const int free_pendants = p.view.pendant_count - std::popcount(blocked);
    ++hist[static_cast<std::size_t>(std::popcount(mask) * (p.view.pendant_count + 1) + free_pendants)];
  }
  return hist;
}

}  // namespace

TEST_CASE("isa plumbing") {
  CHECK(isa_supported(Isa::kScalar));
  CHECK(isa_name(Isa::kScalar) == "scalar");
  CHECK(isa_supported(detected_isa()));
  {
    ScopedIsa pin(Isa::kScalar);
    CHECK(active_isa() == Isa::kScalar);
  }
  CHECK(active_isa() == detected_isa());
  if (!isa_supported(Isa::kAvx2)) CHECK_THROWS_AS(set_active_isa(Isa::kAvx2), std::invalid_argument);
}

TEST_CASE("subset scan: scalar matches the definition, AVX2 matches scalar") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int core_count = 1 + trial % 14;
    const int pendant_count = trial % 9;
    const auto p = make_problem(core_count, pendant_count, rng);
    const std::uint64_t total = std::uint64_t{1} << core_count;
    // Odd window boundaries exercise the vector tails.
    const std::uint64_t begin = trial % 3 == 0 ? 0 : std::min<std::uint64_t>(total, 3);
    const std::uint64_t end = trial % 2 == 0 ? total : total - total / 3;
    const auto expected = reference_scan(p, begin, end);
    std::vector<std::uint64_t> scalar(p.view.histogram_size(), 0);
    subset_scan_scalar(p.view, begin, end, scalar);
    CHECK(scalar == expected);
    if (isa_supported(Isa::kAvx2)) {
      std::vector<std::uint64_t> avx(p.view.histogram_size(), 0);
      subset_scan_avx2(p.view, begin, end, avx);
      CHECK(avx == scalar);
    }
    std::vector<std::uint64_t> dispatched(p.view.histogram_size(), 0);
    subset_scan(p.view, begin, end, dispatched);
    CHECK(dispatched == scalar);
  }
}

TEST_CASE("independence flags: scalar matches the definition, AVX2 matches scalar") {
  std::mt19937_64 rng(99);
  for (int n : {1, 5, 17, 40, 64}) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v) {
      const int p = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
      adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << p;
      adj[static_cast<std::size_t>(p)] |= std::uint64_t{1} << v;
    }
    const std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::size_t count : {0u, 1u, 3u, 4u, 7u, 257u}) {
      std::vector<std::uint64_t> sets(count);
      for (auto& s : sets) s = rng() & rng() & universe;
      std::vector<std::uint8_t> expected(count);
      for (std::size_t j = 0; j < count; ++j) {
        bool ok = true;
        for (int v = 0; v < n; ++v)
          if ((sets[j] >> v & 1) && (adj[static_cast<std::size_t>(v)] & sets[j])) ok = false;
        expected[j] = ok ? 1 : 0;
      }
      std::vector<std::uint8_t> scalar(count, 7);
      independence_flags_scalar(adj, sets, scalar);
      CHECK(scalar == expected);
      if (isa_supported(Isa::kAvx2)) {
        std::vector<std::uint8_t> avx(count, 7);
        independence_flags_avx2(adj, sets, avx);
        CHECK(avx == scalar);
      }
    }
  }
}
