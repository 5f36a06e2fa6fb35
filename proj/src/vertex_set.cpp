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

#include "hkstar/vertex_set.hpp"

#include <charconv>

#include "hkstar/errors.hpp"

namespace hkstar {

std::string format_ids(std::span<const VertexId> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string format_ids(const VertexSet& s) { return format_ids(s.ids()); }

std::vector<VertexId> parse_id_list(const std::string& text) {
  std::vector<VertexId> out;
  std::size_t i = 0;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  while (i <= text.size()) {
    auto j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    auto b = text.find_first_not_of(" \t", i);
    auto e = text.find_last_not_of(" \t", j == 0 ? 0 : j - 1);
    if (b == std::string::npos || b >= j || e < b) throw ParseError(0, "empty entry in id list '" + text + "'");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e + 1, value);
    if (ec != std::errc() || ptr != text.data() + e + 1 || value < 0)
      throw ParseError(0, "malformed id '" + text.substr(b, e + 1 - b) + "'");
    out.push_back(value);
    i = j + 1;
  }
  return out;
}

}  // namespace hkstar
