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

#include <atomic>
#include <stdexcept>
#include <string>

#include "hkstar/kernels/kernels.hpp"

namespace hkstar::kernels {
namespace {

#if defined(HKSTAR_HAVE_AVX2)
constexpr bool kAvx2Compiled = true;
#else
constexpr bool kAvx2Compiled = false;
#endif

bool cpu_has_avx2() noexcept {
#if defined(HKSTAR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

#if !defined(HKSTAR_HAVE_AVX2)
void subset_scan_avx2(const ScanProblem&, std::uint64_t, std::uint64_t, std::span<std::uint64_t>) {
  throw std::logic_error("AVX2 kernels not built");
}
void independence_flags_avx2(std::span<const std::uint64_t>, std::span<const std::uint64_t>, std::span<std::uint8_t>) {
  throw std::logic_error("AVX2 kernels not built");
}
#endif

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) noexcept {
  if (isa == Isa::kScalar) return true;
  return kAvx2Compiled && cpu_has_avx2();
}

Isa detected_isa() noexcept { return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar; }

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("ISA " + std::string(isa_name(isa)) + " not supported here");
  active().store(isa, std::memory_order_relaxed);
}

void subset_scan(const ScanProblem& p, std::uint64_t begin, std::uint64_t end, std::span<std::uint64_t> hist) {
  if (active_isa() == Isa::kAvx2) subset_scan_avx2(p, begin, end, hist);
  else subset_scan_scalar(p, begin, end, hist);
}

void independence_flags(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> sets,
                        std::span<std::uint8_t> out) {
  if (active_isa() == Isa::kAvx2) independence_flags_avx2(adjacency, sets, out);
  else independence_flags_scalar(adjacency, sets, out);
}

}  // namespace hkstar::kernels
