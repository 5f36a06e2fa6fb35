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

#include "internal.hpp"

namespace hkstar {
namespace {

// Two regions grow during the run: L around the leaf, V around v. Every
// queue entry remembers which one it joined.
enum class Side : bool { kL, kV };

struct Entry {
  VertexId v;
  Side side;
};

struct OddState {
  const Forest& host;
  VertexId v, leaf;
  VertexSet& work;
  std::size_t size;
  std::vector<Entry> qs, qt;
  std::size_t head = 0;  // shared: both queues always pop together
  VertexSet l_set, v_set, modified;

  bool on_path(VertexId x) const {
    return detail::is_ancestor_or_self(host, v, x) && detail::is_ancestor_or_self(host, x, leaf);
  }
  bool seen(VertexId x) const { return l_set.contains(x) || v_set.contains(x); }
  void mark(const Entry& e) { (e.side == Side::kL ? l_set : v_set).insert(e.v); }
};

int induced_degree(const Forest& host, const VertexSet& region, VertexId x) {
  int deg = region.contains(host.parent(x)) ? 1 : 0;
  for (VertexId c : host.children(x)) deg += region.contains(c) ? 1 : 0;
  return deg;
}

bool is_subtree(const Forest& host, const VertexSet& region) {
  // Connected iff exactly |region| - 1 vertices have their parent inside.
  std::size_t inner = 0;
  region.for_each([&](VertexId x) { inner += region.contains(host.parent(x)) ? 1 : 0; });
  return inner + 1 == region.size();
}

void monitor(const OddState& st, int iteration) {
  using detail::violated;
  const std::string at = " (iteration " + std::to_string(iteration) + ")";
  const auto& host = st.host;
  const std::size_t live = st.qs.size() - st.head;

  if (st.qt.size() - st.head != live) violated("odd.queue_balance", "queue sizes differ" + at);
  if (st.work.size() != st.size) violated("odd.queue_balance", "set size changed" + at);

  bool overlap = false;
  st.l_set.for_each([&](VertexId x) { overlap = overlap || st.v_set.contains(x); });
  if (overlap) violated("odd.regions", "L and V intersect" + at);
  if (!is_subtree(host, st.l_set) || !is_subtree(host, st.v_set))
    violated("odd.regions", "L or V does not induce a subtree" + at);

  VertexSet in_qs(host.size());
  for (std::size_t i = st.head; i < st.qs.size(); ++i) {
    for (const Entry& e : {st.qs[i], st.qt[i]}) {
      const VertexSet& region = e.side == Side::kL ? st.l_set : st.v_set;
      // With dist(v, leaf) = 1 the first source entry is v itself.
      if (e.v != st.v && !region.contains(e.v)) violated("odd.regions", "queued vertex " + std::to_string(e.v) + " not in its region" + at);
      if (induced_degree(host, region, e.v) > 1)
        violated("odd.regions", "queued vertex " + std::to_string(e.v) + " is not a leaf of its region" + at);
      if (e.v != st.v && st.modified.contains(e.v))
        violated("odd.regions", "queued vertex " + std::to_string(e.v) + " was already modified" + at);
    }
    in_qs.insert(st.qs[i].v);
  }

  st.work.for_each([&](VertexId x) {
    VertexId p = host.parent(x);
    if (p != kNoVertex && st.work.contains(p) && !in_qs.contains(x) && !in_qs.contains(p))
      violated("odd.conflicts_queued", "edge " + std::to_string(p) + "-" + std::to_string(x) + " avoids the source queue" + at);
  });
  for (std::size_t i = st.head; i < st.qs.size(); ++i) {
    const Entry& e = st.qs[i];
    // Only members are constrained: a queued vertex outside the set can
    // have several neighbours inside it and is skipped when dequeued.
    if (!st.work.contains(e.v)) continue;
    int count = 0;
    VertexId neighbour = kNoVertex;
    if (st.work.contains(host.parent(e.v))) ++count, neighbour = host.parent(e.v);
    for (VertexId c : host.children(e.v))
      if (st.work.contains(c)) ++count, neighbour = c;
    if (count != 1)
      violated("odd.conflicts_queued", "source-queue vertex " + std::to_string(e.v) + " has " + std::to_string(count) +
                                           " neighbours in the set" + at);
    const bool via_child = neighbour == host.child(e.v, 1);
    if (via_child != (e.side == Side::kL && st.on_path(e.v)))
      violated("odd.conflicts_queued", "source-queue vertex " + std::to_string(e.v) + " has the wrong conflicting neighbour" + at);
  }

  for (std::size_t i = st.head; i < st.qt.size(); ++i)
    if (st.work.contains(st.qt[i].v))
      violated("odd.target_clear", "target-queue vertex " + std::to_string(st.qt[i].v) + " is in the set" + at);

  for (std::size_t i = st.head; i < st.qs.size(); ++i) {
    if (detail::tree_distance(host, st.leaf, st.qs[i].v) % 2 != 1)
      violated("odd.parity", "source-queue vertex " + std::to_string(st.qs[i].v) + " at even distance from the leaf" + at);
    if (detail::tree_distance(host, st.leaf, st.qt[i].v) % 2 != 0)
      violated("odd.parity", "target-queue vertex " + std::to_string(st.qt[i].v) + " at odd distance from the leaf" + at);
  }

  if (live > 0 && st.qs[st.head].side == st.qt[st.head].side)
    violated("odd.paired_heads", "queue heads lie in the same region" + at);
}

}  // namespace

MapResult phi_odd(const Forest& host, VertexId v, const VertexSet& input, const MapOptions& options) {
  const PathPosition pos = leftmost_path_position(host, v);
  const VertexId leaf = pos.leaf;
  detail::require(pos.distance % 2 == 1, "map.parity",
                  "dist(v, leaf) = " + std::to_string(pos.distance) + " is not odd");
  detail::check_star_input(host, v, leaf, input);
  detail::require(host.children(v).size() >= 2, "map.arity", "v needs a second child");

  MapResult result{input, {}};
  VertexSet& work = result.set;
  detail::Recorder recorder(options.trace, result.trace);

  work.erase(v);
  work.insert(leaf);
  recorder.add(0, TraceAction::kSwap, v, leaf, work);

  const std::size_t n = host.size();
  OddState st{host, v, leaf, work, input.size(), {}, {}, 0, VertexSet(n), VertexSet(n), VertexSet(n)};
  st.l_set.insert(leaf);
  st.v_set.insert(v);
  st.modified.insert(leaf);
  st.modified.insert(v);
  st.qs.push_back({host.parent(leaf), Side::kL});
  st.qt.push_back({host.child(v, 2), Side::kV});
  if (st.qs.back().v != v) st.mark(st.qs.back());
  st.mark(st.qt.back());

  std::vector<VertexId> enq_s, enq_t;
  // Pushes the pair (a -> Q^s, b -> Q^t); both must be fresh.
  auto push = [&](Entry a, Entry b) {
    if (st.seen(a.v) || st.seen(b.v))
      detail::violated("odd.fresh", "vertex " + std::to_string(st.seen(a.v) ? a.v : b.v) + " enqueued twice");
    st.qs.push_back(a);
    st.qt.push_back(b);
    st.mark(a);
    st.mark(b);
    if (recorder.enabled()) {
      enq_s.push_back(a.v);
      enq_t.push_back(b.v);
    }
  };

  for (int iteration = 1;; ++iteration) {
    if (options.monitor) monitor(st, iteration);
    if (st.head == st.qs.size()) {
      recorder.add(iteration, TraceAction::kTerminate, kNoVertex, kNoVertex, work);
      break;
    }
    const Entry s = st.qs[st.head];
    const Entry t = st.qt[st.head];
    ++st.head;
    if (!work.contains(s.v)) {
      recorder.add(iteration, TraceAction::kSkip, s.v, t.v, work);
      continue;
    }
    if (s.side == t.side) detail::violated("odd.paired_heads", "swap within one region");
    const bool child_conflict = s.side == Side::kL && st.on_path(s.v) && work.contains(host.child(s.v, 1));
    work.erase(s.v);
    work.insert(t.v);
    st.modified.insert(s.v);
    st.modified.insert(t.v);
    enq_s.clear();
    enq_t.clear();

    const auto cs = host.children(s.v);
    const auto ct = host.children(t.v);
    if (!ct.empty()) {
      if (cs.size() != ct.size()) detail::violated("odd.arity", "paired vertices with different child counts");
      const Side ss = s.side, ts = t.side;
      if (child_conflict) {
        // Case 1: s on the path in L, conflicting with c_1(s).
        for (std::size_t m = 1; m < ct.size(); ++m) push({ct[m], ts}, {cs[m], ss});
        if (host.parent(s.v) == v) detail::violated("odd.parity", "p(s) reached v");
        push({ct[0], ts}, {host.parent(s.v), ss});
      } else if (s.side == Side::kL) {
        // Case 2: s in L, conflicting with its parent.
        for (std::size_t m = 0; m < ct.size(); ++m) push({ct[m], ts}, {cs[m], ss});
      } else {
        // Case 3: s in V, t in L.
        for (std::size_t m = 1; m < ct.size(); ++m) push({ct[m], ts}, {cs[m], ss});
        if (st.on_path(t.v)) {
          if (host.parent(t.v) != v) push({host.parent(t.v), ts}, {cs[0], ss});
        } else {
          push({ct[0], ts}, {cs[0], ss});
        }
      }
    }
    recorder.add(iteration, TraceAction::kSwap, s.v, t.v, work, enq_s, enq_t);
  }

  if (options.monitor) detail::check_star_output(host, v, leaf, input, work);
  return result;
}

MapResult phi_odd(const RootedTree& t, VertexId v, const VertexSet& input, const MapOptions& options) {
  return phi_odd(Forest::single(t), v, input, options);
}

}  // namespace hkstar
