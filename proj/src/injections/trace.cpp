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

#include <json.hpp>

#include "hkstar/injections.hpp"

namespace hkstar {
namespace {

using Json = nlohmann::ordered_json;

Json vertex(VertexId v, const Labeler& label) {
  if (v == kNoVertex) return nullptr;
  if (label) return label(v);
  return v;
}

Json vertex_list(const std::vector<VertexId>& ids, const Labeler& label) {
  Json arr = Json::array();
  for (VertexId v : ids) arr.push_back(vertex(v, label));
  return arr;
}

}  // namespace

std::string_view action_name(TraceAction a) noexcept {
  switch (a) {
    case TraceAction::kSwap: return "swap";
    case TraceAction::kSkip: return "skip";
    case TraceAction::kTerminate: return "terminate";
    case TraceAction::kPrimaryShift: return "primary-shift";
    case TraceAction::kCasCall: return "cas-call";
    case TraceAction::kSecondaryShift: return "secondary-shift";
  }
  return "?";
}

std::string format_trace(const std::vector<TraceEvent>& events, const Labeler& label) {
  std::string out;
  for (const auto& e : events) {
    Json j;
    j["iteration"] = e.iteration;
    j["s"] = vertex(e.s, label);
    j["t"] = vertex(e.t, label);
    j["action"] = std::string(action_name(e.action));
    j["enqueued_s"] = vertex_list(e.enqueued_s, label);
    j["enqueued_t"] = vertex_list(e.enqueued_t, label);
    j["set_after"] = vertex_list(e.set_after, label);
    out += j.dump();
    out += '\n';
  }
  return out;
}

VertexSet replay_trace(const VertexSet& input, const std::vector<TraceEvent>& events) {
  VertexSet s = input;
  for (const auto& e : events) {
    switch (e.action) {
      case TraceAction::kSwap:
      case TraceAction::kPrimaryShift:
      case TraceAction::kSecondaryShift:
        s.erase(e.s);
        s.insert(e.t);
        break;
      default:
        break;
    }
  }
  return s;
}

}  // namespace hkstar
