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
namespace detail {

void check_star_input(const Forest& host, VertexId v, VertexId leaf, const VertexSet& input) {
  require(input.universe() == host.size(), "map.universe", "set universe does not match the host");
  require(host.is_independent(input), "map.independent", "input is not an independent set");
  require(input.contains(v), "map.domain", "input must contain v = " + std::to_string(v));
  require(!input.contains(leaf), "map.domain", "input must not contain the leaf " + std::to_string(leaf));
}

void check_star_output(const Forest& host, VertexId v, VertexId leaf, const VertexSet& input, const VertexSet& out) {
  if (out.size() != input.size()) violated("map.output", "size changed");
  if (!host.is_independent(out)) violated("map.output", "output is not independent");
  if (out.contains(v) || !out.contains(leaf)) violated("map.output", "output must contain the leaf and not v");
}

namespace {

struct EvenState {
  const Forest& host;
  VertexId v, leaf;
  VertexSet& work;
  std::size_t size;
  // Everything the procedure may have touched so far.
  VertexSet allowed;
  const ModificationLog& log;
};

void allow_subtree(const Forest& host, VertexSet& allowed, VertexId root) {
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    allowed.insert(x);
    for (VertexId c : host.children(x)) stack.push_back(c);
  }
}

void monitor(const EvenState& st, VertexId d, VertexId u, int iteration) {
  const std::string at = " (iteration " + std::to_string(iteration) + ")";
  const auto& host = st.host;
  if (!is_ancestor_or_self(host, u, d)) violated("even.pointers", "d is neither u nor a descendant of u" + at);
  if (st.work.contains(u) || (host.parent(u) != kNoVertex && st.work.contains(host.parent(u))))
    violated("even.u_clear", "u or its parent is in the set" + at);
  if (st.work.size() != st.size) violated("even.size", "set size changed" + at);
  for (std::size_t x = 0; x < host.size(); ++x) {
    auto c = st.log.count(static_cast<VertexId>(x));
    if (c > 1) violated("even.modified_once", "vertex " + std::to_string(x) + " modified " + std::to_string(c) + " times" + at);
    if (c == 1 && !st.allowed.contains(static_cast<VertexId>(x)))
      violated("even.modified_region", "vertex " + std::to_string(x) + " modified outside the permitted region" + at);
  }
  const bool d_in = st.work.contains(d);
  const VertexId c1d = host.child(d, 1);
  st.work.for_each([&](VertexId x) {
    VertexId p = host.parent(x);
    if (p == kNoVertex || !st.work.contains(p)) return;
    if (!(d_in && p == d && x == c1d))
      violated("even.edges", "unexpected edge " + std::to_string(p) + "-" + std::to_string(x) + " in the set" + at);
  });
}

}  // namespace
}  // namespace detail

MapResult phi_even(const Forest& host, VertexId v, const VertexSet& input, const MapOptions& options) {
  const PathPosition pos = leftmost_path_position(host, v);
  const VertexId leaf = pos.leaf;
  detail::require(pos.distance >= 2 && pos.distance % 2 == 0, "map.parity",
                  "dist(v, leaf) = " + std::to_string(pos.distance) + " is not even and positive");
  detail::check_star_input(host, v, leaf, input);

  MapResult result{input, {}};
  VertexSet& work = result.set;
  detail::Recorder recorder(options.trace, result.trace);
  detail::ModificationLog log(options.monitor ? host.size() : 0);
  detail::ModificationLog* log_ptr = options.monitor ? &log : nullptr;

  work.erase(v);
  work.insert(leaf);
  if (log_ptr) {
    log.touch(v);
    log.touch(leaf);
  }
  recorder.add(0, TraceAction::kSwap, v, leaf, work);

  VertexId d = host.parent(leaf);
  VertexId u = host.child(v, 1);
  detail::EvenState st{host, v, leaf, work, input.size(), VertexSet(options.monitor ? host.size() : 0), log};
  if (options.monitor) {
    st.allowed.insert(v);
    st.allowed.insert(leaf);
  }

  for (int iteration = 1;; ++iteration) {
    if (options.monitor) detail::monitor(st, d, u, iteration);

    // Primary check / shift.
    if (!work.contains(d)) {
      recorder.add(iteration, TraceAction::kTerminate, kNoVertex, kNoVertex, work);
      break;
    }
    if (d == u) detail::violated("even.pointers", "d reached u while in the set");
    work.erase(d);
    work.insert(u);
    if (log_ptr) {
      log.touch(d);
      log.touch(u);
      st.allowed.insert(d);
      st.allowed.insert(u);
    }
    recorder.add(iteration, TraceAction::kPrimaryShift, d, u, work);

    // Side conflicts c_m(u) for m >= 2, resolved by CAS into c_m(d).
    auto du = host.children(u);
    auto dd = host.children(d);
    if (du.size() != dd.size()) detail::violated("even.arity", "u and d have different child counts");
    for (std::size_t m = 1; m < du.size(); ++m) {
      const VertexId cu = du[m], cd = dd[m];
      if (options.monitor) {
        detail::allow_subtree(host, st.allowed, cu);
        detail::allow_subtree(host, st.allowed, cd);
      }
      if (!work.contains(cu)) continue;
      recorder.add(iteration, TraceAction::kCasCall, cu, cd, work);
      try {
        detail::check_cas_preconditions(host, cd, cu, work);
      } catch (const PreconditionError& e) {
        detail::violated("even.cas_roles", e.what());
      }
      detail::cas_in_place(host, cd, cu, work, options, recorder, log_ptr);
    }

    // Secondary check / shift.
    const VertexId c1u = host.child(u, 1);
    if (!work.contains(c1u)) {
      recorder.add(iteration, TraceAction::kTerminate, kNoVertex, kNoVertex, work);
      break;
    }
    const VertexId pd = host.parent(d);
    if (c1u == pd) detail::violated("even.pointers", "c_1(u) coincides with p(d)");
    work.erase(c1u);
    work.insert(pd);
    if (log_ptr) {
      log.touch(c1u);
      log.touch(pd);
      st.allowed.insert(c1u);
      st.allowed.insert(pd);
    }
    recorder.add(iteration, TraceAction::kSecondaryShift, c1u, pd, work);

    const int before = host.depth(d) - host.depth(u);
    d = host.parent(pd);
    u = host.child(c1u, 1);
    if (d == kNoVertex || u == kNoVertex) detail::violated("even.pointers", "pointer left the path");
    if (options.monitor && host.depth(d) - host.depth(u) != before - 4)
      detail::violated("even.progress", "u-d distance did not shrink by 4");
  }

  if (options.monitor) detail::check_star_output(host, v, leaf, input, work);
  return result;
}

MapResult phi_even(const RootedTree& t, VertexId v, const VertexSet& input, const MapOptions& options) {
  return phi_even(Forest::single(t), v, input, options);
}

}  // namespace hkstar
