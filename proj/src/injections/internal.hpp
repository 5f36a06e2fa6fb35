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

#include <string>
#include <vector>

#include "hkstar/errors.hpp"
#include "hkstar/injections.hpp"

namespace hkstar::detail {

bool is_ancestor_or_self(const Forest& f, VertexId ancestor, VertexId x);
int tree_distance(const Forest& f, VertexId a, VertexId b);
bool on_leftmost_path(const Forest& f, VertexId x);

/// Appends events when tracing is on; a no-op otherwise.
class Recorder {
 public:
  Recorder(bool enabled, std::vector<TraceEvent>& out) : enabled_(enabled), out_(out) {}
  bool enabled() const noexcept { return enabled_; }
  void add(int iteration, TraceAction action, VertexId s, VertexId t, const VertexSet& set,
           std::vector<VertexId> enq_s = {}, std::vector<VertexId> enq_t = {}) {
    if (!enabled_) return;
    out_.push_back(TraceEvent{iteration, s, t, action, std::move(enq_s), std::move(enq_t), set.ids()});
  }

 private:
  bool enabled_;
  std::vector<TraceEvent>& out_;
};

/// Per-vertex modification counter shared by nested procedures.
class ModificationLog {
 public:
  explicit ModificationLog(std::size_t n) : count_(n, 0) {}
  void touch(VertexId v) { ++count_[static_cast<std::size_t>(v)]; }
  int count(VertexId v) const { return count_[static_cast<std::size_t>(v)]; }
  std::size_t universe() const noexcept { return count_.size(); }

 private:
  std::vector<int> count_;
};

[[noreturn]] inline void violated(const std::string& condition, const std::string& detail) {
  throw InvariantViolation(condition, detail);
}

inline void require(bool ok, const std::string& condition, const std::string& detail) {
  if (!ok) throw PreconditionError(condition, detail);
}

/// Validates the CAS hypotheses on `work` (restricted to the two subtrees).
/// Throws PreconditionError naming the first failed one.
void check_cas_preconditions(const Forest& host, VertexId d, VertexId u, const VertexSet& work);

/// Domain check shared by the star maps: independent, contains v, not leaf.
void check_star_input(const Forest& host, VertexId v, VertexId leaf, const VertexSet& input);
/// Output check run under monitoring.
void check_star_output(const Forest& host, VertexId v, VertexId leaf, const VertexSet& input, const VertexSet& out);

/// Runs CAS on `work` in place. `log` may be null.
void cas_in_place(const Forest& host, VertexId d, VertexId u, VertexSet& work, const MapOptions& options,
                  Recorder& recorder, ModificationLog* log);

}  // namespace hkstar::detail
