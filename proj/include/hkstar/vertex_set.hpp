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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hkstar {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

/// Membership bit-vector over the ids [0, universe) of one tree or forest.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> ids) : VertexSet(universe) {
    for (VertexId v : ids) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const VertexId> ids) : VertexSet(universe) {
    for (VertexId v : ids) insert(v);
  }

  /// Builds a set from the low `universe` bits of `bits`; universe must be <= 64.
  static VertexSet from_bits(std::size_t universe, std::uint64_t bits) {
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = bits;
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(VertexId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
           ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u);
  }
  void insert(VertexId v) { words_.at(static_cast<std::size_t>(v) >> 6) |= std::uint64_t{1} << (v & 63); }
  void erase(VertexId v) { words_.at(static_cast<std::size_t>(v) >> 6) &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Low 64 bits; exact when universe <= 64.
  std::uint64_t low_bits() const noexcept { return words_.empty() ? 0 : words_[0]; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::vector<VertexId> ids() const {
    std::vector<VertexId> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        out.push_back(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        fn(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Lexicographic by sorted id list.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    auto x = a.ids(), y = b.ids();
    return x < y;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

/// "1,4,7" (ascending). Empty set renders as "".
std::string format_ids(const VertexSet& s);
std::string format_ids(std::span<const VertexId> ids);

/// Parses "1,4,7"; whitespace around entries is ignored. Throws ParseError.
std::vector<VertexId> parse_id_list(const std::string& text);

}  // namespace hkstar
