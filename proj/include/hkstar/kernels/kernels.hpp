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

// Bit-parallel inner loops of the brute-force oracles and the bulk verifier.
// Every kernel has a scalar reference and an AVX2 variant; the AVX2 path is
// picked at runtime when the CPU supports it and must agree with the scalar
// one bit for bit.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hkstar::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when this binary carries the variant and the CPU can run it.
bool isa_supported(Isa isa) noexcept;

/// Best supported ISA.
Isa detected_isa() noexcept;

/// ISA used by the dispatching entry points. Defaults to detected_isa().
Isa active_isa() noexcept;

/// Overrides the dispatch choice (tests pin both variants this way).
/// Throws std::invalid_argument when the ISA is unsupported.
void set_active_isa(Isa isa);

/// Restores the dispatch choice on scope exit.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

/// A graph split into "core" vertices (bit i of a core mask) and "pendant"
/// vertices, each pendant hanging off exactly one core vertex.
///   core_adjacency[i]    - core neighbours of core vertex i
///   pendant_adjacency[i] - pendants attached to core vertex i
struct ScanProblem {
  int core_count = 0;
  int pendant_count = 0;
  std::span<const std::uint64_t> core_adjacency;
  std::span<const std::uint64_t> pendant_adjacency;

  std::size_t histogram_size() const noexcept {
    return static_cast<std::size_t>(core_count + 1) * static_cast<std::size_t>(pendant_count + 1);
  }
};

/// For every core mask in [begin, end) that is independent, increments
/// hist[popcount(mask) * (pendant_count + 1) + free_pendants], where
/// free_pendants counts pendants whose core neighbour is outside the mask.
/// core_count <= 62, pendant_count <= 64.
void subset_scan_scalar(const ScanProblem& p, std::uint64_t begin, std::uint64_t end, std::span<std::uint64_t> hist);
void subset_scan_avx2(const ScanProblem& p, std::uint64_t begin, std::uint64_t end, std::span<std::uint64_t> hist);
void subset_scan(const ScanProblem& p, std::uint64_t begin, std::uint64_t end, std::span<std::uint64_t> hist);

/// out[j] = 1 iff no two members of sets[j] are adjacent, where adjacency[v]
/// is the neighbour mask of vertex v (at most 64 vertices).
void independence_flags_scalar(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> sets,
                               std::span<std::uint8_t> out);
void independence_flags_avx2(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> sets,
                             std::span<std::uint8_t> out);
void independence_flags(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> sets,
                        std::span<std::uint8_t> out);

}  // namespace hkstar::kernels
