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

#include <algorithm>

#include "internal.hpp"

namespace hkstar {
namespace detail {
namespace {

struct Entry {
  VertexId v;
  bool in_td;  // which of the two subtrees the vertex belongs to
};

// FIFO with a moving head; entries are never removed from the storage, so
// `all()` doubles as the record of everything ever enqueued.
class Queue {
 public:
  void push(Entry e) { items_.push_back(e); }
  bool empty() const noexcept { return head_ == items_.size(); }
  std::size_t size() const noexcept { return items_.size() - head_; }
  Entry pop() { return items_[head_++]; }
  const Entry& front() const { return items_[head_]; }
  std::span<const Entry> live() const { return std::span<const Entry>(items_).subspan(head_); }
  bool contains(VertexId v) const {
    return std::any_of(items_.begin() + static_cast<std::ptrdiff_t>(head_), items_.end(),
                       [v](const Entry& e) { return e.v == v; });
  }

 private:
  std::vector<Entry> items_;
  std::size_t head_ = 0;
};

struct CasState {
  const Forest& host;
  VertexId d, u;
  VertexSet& work;
  Queue qs, qt;
  VertexSet visited;
  VertexSet modified;
  std::size_t initial_size;

  bool in_td(VertexId x) const { return is_ancestor_or_self(host, d, x); }
  bool in_tu(VertexId x) const { return is_ancestor_or_self(host, u, x); }
  bool in_region(VertexId x) const { return in_td(x) || in_tu(x); }
  // Parent inside the two subtrees; the roots have none.
  VertexId region_parent(VertexId x) const { return x == d || x == u ? kNoVertex : host.parent(x); }
  int root_distance(const Entry& e) const { return host.depth(e.v) - host.depth(e.in_td ? d : u); }
};

void monitor(const CasState& st, int iteration) {
  const std::string at = " (iteration " + std::to_string(iteration) + ")";
  if (st.qs.size() != st.qt.size()) violated("cas.queue_balance", "queue sizes differ" + at);
  if (st.work.size() != st.initial_size) violated("cas.queue_balance", "set size changed" + at);

  for (const Queue* q : {&st.qs, &st.qt})
    for (const Entry& e : q->live())
      if (e.in_td != st.in_td(e.v) || !st.in_region(e.v))
        violated("cas.visited_subtrees", "queued vertex " + std::to_string(e.v) + " tagged with the wrong subtree" + at);

  bool ok = true;
  st.visited.for_each([&](VertexId x) {
    if (!ok) return;
    VertexId p = st.region_parent(x);
    if (p != kNoVertex && !st.visited.contains(p)) ok = false;
  });
  if (!ok) violated("cas.visited_subtrees", "visited region is not a pair of rooted subtrees" + at);
  for (const Queue* q : {&st.qs, &st.qt})
    for (const Entry& e : q->live()) {
      for (VertexId c : st.host.children(e.v))
        if (st.visited.contains(c))
          violated("cas.visited_subtrees", "queued vertex " + std::to_string(e.v) + " is not a leaf of the visited region" + at);
      if (st.modified.contains(e.v))
        violated("cas.visited_subtrees", "queued vertex " + std::to_string(e.v) + " was already modified" + at);
    }

  st.work.for_each([&](VertexId x) {
    if (!st.in_region(x)) return;
    VertexId p = st.region_parent(x);
    if (p != kNoVertex && st.work.contains(p) && !st.qs.contains(x))
      violated("cas.conflicts_queued", "edge " + std::to_string(p) + "-" + std::to_string(x) + " with child not in source queue" + at);
  });

  for (const Entry& e : st.qt.live()) {
    if (st.work.contains(e.v)) violated("cas.target_clear", "target-queue vertex " + std::to_string(e.v) + " is in the set" + at);
    VertexId p = st.region_parent(e.v);
    if (p != kNoVertex && st.work.contains(p))
      violated("cas.target_clear", "parent of target-queue vertex " + std::to_string(e.v) + " is in the set" + at);
  }

  for (const Entry& e : st.qs.live())
    if (e.in_td && st.root_distance(e) % 2 != 1)
      violated("cas.parity", "source-queue vertex " + std::to_string(e.v) + " at even distance from d" + at);
  for (const Entry& e : st.qt.live())
    if (e.in_td && st.root_distance(e) % 2 != 0)
      violated("cas.parity", "target-queue vertex " + std::to_string(e.v) + " at odd distance from d" + at);

  if (!st.qs.empty()) {
    const Entry& s = st.qs.front();
    const Entry& t = st.qt.front();
    if (s.in_td == t.in_td) violated("cas.paired_heads", "queue heads lie in the same subtree" + at);
    if (st.root_distance(s) != st.root_distance(t))
      violated("cas.paired_heads", "queue heads at different distances from their roots" + at);
  }
}

}  // namespace

void check_cas_preconditions(const Forest& host, VertexId d, VertexId u, const VertexSet& work) {
  require(host.contains(d) && host.contains(u), "cas.roots", "root out of range");
  require(d != u && !is_ancestor_or_self(host, d, u) && !is_ancestor_or_self(host, u, d), "cas.roots",
          "subtrees at d and u must be disjoint");
  const auto& shape_d = host.tree(host.component(d)).shape();
  const auto& shape_u = host.tree(host.component(u)).shape();
  require(shape_d && shape_u, "cas.perfect", "both subtrees must be perfect");
  const int levels_d = host.subtree_levels(d), levels_u = host.subtree_levels(u);
  require(levels_d % 2 == 1, "cas.td_levels_odd", "subtree at d has " + std::to_string(levels_d) + " levels");
  require(levels_u > levels_d, "cas.tu_taller",
          "subtree at u has " + std::to_string(levels_u) + " levels, d has " + std::to_string(levels_d));
  require(levels_d == 1 || shape_d->arity == shape_u->arity, "cas.arity", "subtrees have different arities");
  require(work.contains(u), "cas.u_in_set", "u must be in the set");
  require(!work.contains(d), "cas.d_not_in_set", "d must not be in the set");
  bool independent = true;
  work.for_each([&](VertexId x) {
    if (!independent || x == d || x == u) return;
    if (!is_ancestor_or_self(host, d, x) && !is_ancestor_or_self(host, u, x)) return;
    if (work.contains(host.parent(x))) independent = false;
  });
  require(independent, "cas.independent", "set is not independent on the two subtrees");
}

void cas_in_place(const Forest& host, VertexId d, VertexId u, VertexSet& work, const MapOptions& options,
                  Recorder& recorder, ModificationLog* log) {
  CasState st{host, d, u, work, {}, {}, VertexSet(host.size()), VertexSet(host.size()), work.size()};
  st.qs.push({u, false});
  st.qt.push({d, true});
  st.visited.insert(u);
  st.visited.insert(d);

  for (int iteration = 1;; ++iteration) {
    if (options.monitor) monitor(st, iteration);
    if (st.qs.empty()) {
      recorder.add(iteration, TraceAction::kTerminate, kNoVertex, kNoVertex, work);
      break;
    }
    const Entry s = st.qs.pop();
    const Entry t = st.qt.pop();
    if (!work.contains(s.v)) {
      recorder.add(iteration, TraceAction::kSkip, s.v, t.v, work);
      continue;
    }
    work.erase(s.v);
    work.insert(t.v);
    st.modified.insert(s.v);
    st.modified.insert(t.v);
    if (log) {
      log->touch(s.v);
      log->touch(t.v);
    }

    bool expand = false;
    if (s.in_td) {
      // s sits at odd distance from d inside a tree with an odd level count.
      if (host.is_leaf(s.v) || host.is_leaf(t.v))
        violated("cas.source_leaf", "source " + std::to_string(s.v) + " in the d-subtree has no children");
      expand = true;
    } else {
      expand = !host.is_leaf(t.v);
      if (expand && host.is_leaf(s.v))
        violated("cas.source_leaf", "source " + std::to_string(s.v) + " is a leaf while target " + std::to_string(t.v) + " is not");
    }

    std::vector<VertexId> enq_s, enq_t;
    if (expand) {
      auto cs = host.children(s.v);
      auto ct = host.children(t.v);
      if (cs.size() != ct.size()) violated("cas.arity", "paired vertices with different child counts");
      for (std::size_t j = 0; j < cs.size(); ++j) {
        st.qt.push({cs[j], s.in_td});
        st.qs.push({ct[j], t.in_td});
        st.visited.insert(cs[j]);
        st.visited.insert(ct[j]);
        if (recorder.enabled()) {
          enq_t.push_back(cs[j]);
          enq_s.push_back(ct[j]);
        }
      }
    }
    recorder.add(iteration, TraceAction::kSwap, s.v, t.v, work, std::move(enq_s), std::move(enq_t));
  }

  if (options.monitor) {
    if (!work.contains(d) || work.contains(u)) violated("cas.output", "output must contain d and not u");
    work.for_each([&](VertexId x) {
      if (x == d || x == u || !st.in_region(x)) return;
      if (work.contains(host.parent(x))) violated("cas.output", "output is not independent on the subtrees");
    });
  }
}

}  // namespace detail

MapResult cas(const Forest& host, VertexId d, VertexId u, const VertexSet& input, const MapOptions& options) {
  detail::require(input.universe() == host.size(), "cas.universe", "set universe does not match the host");
  detail::check_cas_preconditions(host, d, u, input);
  MapResult result{input, {}};
  detail::Recorder recorder(options.trace, result.trace);
  detail::cas_in_place(host, d, u, result.set, options, recorder, nullptr);
  return result;
}

MapResult cas(const RootedTree& td, const RootedTree& tu, const VertexSet& input, const MapOptions& options) {
  Forest host({td, tu});
  detail::require(input.universe() == host.size(), "cas.universe", "set universe does not match td + tu");
  detail::require(host.is_independent(input), "cas.independent", "set is not independent");
  return cas(host, host.root(0), host.root(1), input, options);
}

Labeler cas_labeler(const RootedTree& td) {
  const auto split = static_cast<VertexId>(td.size());
  return [split](VertexId v) { return v < split ? "d" + std::to_string(v) : "u" + std::to_string(v - split); };
}

}  // namespace hkstar
