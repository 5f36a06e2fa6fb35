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

// Star-to-leaf injections on perfect trees.
//
// For a perfect tree with leftmost leaf l and a vertex v on the path from the
// root to l, the maps below send every independent set containing v but not l
// (the family A) to one containing l but not v (the family B), preserving
// size. Distinct inputs give distinct outputs, so |A| <= |B| and the star at
// l is at least as large as the star at v.
//
//   cas       - conditional alternating swap between two disjoint perfect
//               subtrees: moves membership from root u to root d and resolves
//               the conflicts that causes, level by level, with two queues.
//   phi_even  - used when dist(v, l) is even: shifts membership along the
//               path and hands side conflicts to cas.
//   phi_odd   - used when dist(v, l) is odd: a two-queue swap between the
//               region around l and the region around c_2(v).
//
// All maps run on a host Forest and take global vertex ids. With
// MapOptions::monitor set, every loop invariant of the procedure is checked
// at each iteration boundary and a breach throws InvariantViolation.
// Contract breaches by the caller throw PreconditionError.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hkstar/tree.hpp"
#include "hkstar/vertex_set.hpp"

namespace hkstar {

enum class TraceAction { kSwap, kSkip, kTerminate, kPrimaryShift, kCasCall, kSecondaryShift };

std::string_view action_name(TraceAction a) noexcept;

/// One iteration record. Swap-like actions (swap, primary-shift,
/// secondary-shift) remove `s` and add `t`; replaying them in order from the
/// input set reproduces the output.
struct TraceEvent {
  int iteration = 0;
  VertexId s = kNoVertex;
  VertexId t = kNoVertex;
  TraceAction action = TraceAction::kSkip;
  std::vector<VertexId> enqueued_s;
  std::vector<VertexId> enqueued_t;
  std::vector<VertexId> set_after;
};

struct MapOptions {
  bool monitor = false;
  bool trace = false;
};

struct MapResult {
  VertexSet set;
  std::vector<TraceEvent> trace;
};

/// Renders a vertex id in trace output; empty means plain integers.
using Labeler = std::function<std::string(VertexId)>;

/// Newline-delimited JSON, one object per event, keys in the order
/// iteration, s, t, action, enqueued_s, enqueued_t, set_after.
std::string format_trace(const std::vector<TraceEvent>& events, const Labeler& label = {});

/// Applies the swap-like events of a trace to `input`.
VertexSet replay_trace(const VertexSet& input, const std::vector<TraceEvent>& events);

/// CAS on two disjoint full subtrees of `host` rooted at d and u. Both
/// subtrees must be perfect with equal arity, the one at d must have an odd
/// number of levels and the one at u strictly more. The restriction of
/// `input` to the two subtrees must be independent, contain u and not d.
/// Vertices outside the subtrees are carried over unchanged.
MapResult cas(const Forest& host, VertexId d, VertexId u, const VertexSet& input, const MapOptions& options = {});

/// Stand-alone form: the host is the forest [td, tu], so d = 0 and
/// u = td.size(), and `input` uses those global ids.
MapResult cas(const RootedTree& td, const RootedTree& tu, const VertexSet& input, const MapOptions& options = {});

/// Labels for the stand-alone CAS host: "d<i>" for td, "u<j>" for tu.
Labeler cas_labeler(const RootedTree& td);

/// dist(v, l) even and >= 2; `input` in A for (v, l) where l is the leftmost
/// leaf of v's component and v lies on the path from its root to l.
MapResult phi_even(const Forest& host, VertexId v, const VertexSet& input, const MapOptions& options = {});
MapResult phi_even(const RootedTree& t, VertexId v, const VertexSet& input, const MapOptions& options = {});

/// dist(v, l) odd; otherwise as phi_even.
MapResult phi_odd(const Forest& host, VertexId v, const VertexSet& input, const MapOptions& options = {});
MapResult phi_odd(const RootedTree& t, VertexId v, const VertexSet& input, const MapOptions& options = {});

/// Dispatches on the parity of dist(v, l). Throws PreconditionError for v == l.
MapResult map_star(const Forest& host, VertexId v, const VertexSet& input, const MapOptions& options = {});
MapResult map_star(const RootedTree& t, VertexId v, const VertexSet& input, const MapOptions& options = {});

/// Star sizes in a perfect tree depend only on depth: the vertex on the
/// leftmost path at v's depth stands in for v.
VertexId canonical_center(const RootedTree& t, VertexId v);

/// Leftmost leaf of v's component and dist(v, leaf); throws
/// PreconditionError when v is not on that component's leftmost path.
struct PathPosition {
  VertexId leaf = kNoVertex;
  int distance = 0;
};
PathPosition leftmost_path_position(const Forest& host, VertexId v);

}  // namespace hkstar
