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

#include "hkstar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <json.hpp>
#include <limits>
#include <thread>

#include "hkstar/errors.hpp"
#include "hkstar/kernels/kernels.hpp"

namespace hkstar {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string serialize_forest(const Forest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.tree_count(); ++i) {
    if (i) out += '\n';
    out += serialize_tree(f.tree(i));
  }
  return out;
}

std::vector<std::uint64_t> adjacency_masks(const Forest& f) {
  std::vector<std::uint64_t> adj(f.size(), 0);
  for (std::size_t g = 0; g < f.size(); ++g) {
    const VertexId p = f.parent(static_cast<VertexId>(g));
    if (p == kNoVertex) continue;
    adj[g] |= std::uint64_t{1} << p;
    adj[static_cast<std::size_t>(p)] |= std::uint64_t{1} << g;
  }
  return adj;
}

// Collects (output, input) pairs from one map, validates each output and
// finds collisions at the end. Independence of outputs goes through the
// batched kernel when the host fits in one word.
class InjectionAudit {
 public:
  InjectionAudit(const Forest& f, Witness base, VertexId must_have, VertexId must_not)
      : f_(f), base_(std::move(base)), must_have_(must_have), must_not_(must_not), narrow_(f.size() <= 64) {
    if (narrow_) adjacency_ = adjacency_masks(f);
  }

  bool failed() const { return witness_.has_value(); }
  std::uint64_t count() const { return count_; }

  void fail(const VertexSet& input, std::string detail, const VertexSet* second = nullptr) {
    if (failed()) return;
    Witness w = base_;
    w.k = input.size();
    w.set = input.ids();
    if (second) w.second_set = second->ids();
    w.detail = std::move(detail);
    witness_ = std::move(w);
  }

  void add(const VertexSet& input, const VertexSet& output) {
    ++count_;
    if (output.size() != input.size()) return fail(input, "image has a different size");
    if (!output.contains(must_have_) || output.contains(must_not_)) return fail(input, "image is in the wrong class");
    if (!narrow_) {
      if (!f_.is_independent(output)) return fail(input, "image is not independent");
      wide_.emplace_back(output, input);
      return;
    }
    pairs_.emplace_back(output.low_bits(), input.low_bits());
    if (pairs_.size() - checked_ >= kBatch) flush();
  }

  Verdict finish(std::string name, Clock::time_point start) {
    if (narrow_) flush();
    if (!failed()) find_collision();
    Verdict v;
    v.check = std::move(name);
    v.passed = !failed();
    v.witness = witness_;
    v.instances = count_;
    v.elapsed_seconds = seconds_since(start);
    return v;
  }

 private:
  static constexpr std::size_t kBatch = 4096;

  void flush() {
    const std::size_t n = pairs_.size() - checked_;
    if (n == 0) return;
    masks_.resize(n);
    flags_.resize(n);
    for (std::size_t i = 0; i < n; ++i) masks_[i] = pairs_[checked_ + i].first;
    kernels::independence_flags(adjacency_, masks_, flags_);
    for (std::size_t i = 0; i < n && !failed(); ++i)
      if (!flags_[i]) fail(VertexSet::from_bits(f_.size(), pairs_[checked_ + i].second), "image is not independent");
    checked_ = pairs_.size();
  }

  void find_collision() {
    if (narrow_) {
      std::sort(pairs_.begin(), pairs_.end());
      for (std::size_t i = 1; i < pairs_.size(); ++i)
        if (pairs_[i].first == pairs_[i - 1].first) {
          const auto b = VertexSet::from_bits(f_.size(), pairs_[i].second);
          return fail(VertexSet::from_bits(f_.size(), pairs_[i - 1].second), "two inputs share an image", &b);
        }
    } else {
      std::sort(wide_.begin(), wide_.end());
      for (std::size_t i = 1; i < wide_.size(); ++i)
        if (wide_[i].first == wide_[i - 1].first)
          return fail(wide_[i - 1].second, "two inputs share an image", &wide_[i].second);
    }
  }

  const Forest& f_;
  Witness base_;
  VertexId must_have_, must_not_;
  bool narrow_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;
  std::vector<std::pair<VertexSet, VertexSet>> wide_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint8_t> flags_;
  std::size_t checked_ = 0;
  std::uint64_t count_ = 0;
  std::optional<Witness> witness_;
};

// Maps one input, turning monitor trips and contract errors into failures.
template <typename Map>
void audit_one(InjectionAudit& audit, const VertexSet& input, Map&& map) {
  if (audit.failed()) return;
  try {
    audit.add(input, map(input));
  } catch (const InvariantViolation& e) {
    audit.fail(input, std::string("monitor tripped: ") + e.what());
  } catch (const PreconditionError& e) {
    audit.fail(input, std::string("map rejected a domain member: ") + e.what());
  }
}

std::vector<CountPolynomial> all_star_profiles(const Forest& f) {
  std::vector<CountPolynomial> out;
  out.reserve(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) out.push_back(star_profile(f, static_cast<VertexId>(g)));
  return out;
}

Json count_json(const BigCount& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

}  // namespace

Verdict check_injection_exhaustive(const RootedTree& t, VertexId v, std::optional<std::size_t> k) {
  const auto start = Clock::now();
  const Forest f = Forest::single(t);
  const PathPosition pos = leftmost_path_position(f, v);
  const VertexId leaf = pos.leaf;
  const std::string name = "injection";
  Witness base;
  base.structure = serialize_tree(t);
  base.v = v;
  base.other = leaf;
  InjectionAudit audit(f, base, leaf, v);
  if (v == leaf) return audit.finish(name, start);

  const MapOptions opts{true, false};
  auto map = [&](const VertexSet& s) { return map_star(f, v, s, opts).set; };
  if (k) {
    for_each_independent_set(f, *k, [&](const VertexSet& s) {
      if (s.contains(v) && !s.contains(leaf)) audit_one(audit, s, map);
      return !audit.failed();
    });
  } else {
    VertexSet req(f.size()), exc(f.size());
    req.insert(v);
    exc.insert(leaf);
    for_each_constrained_independent_set(f, req, exc, [&](const VertexSet& s) { audit_one(audit, s, map); });
  }
  return audit.finish(name, start);
}

Verdict check_theorem_main(const RootedTree& t) {
  const auto start = Clock::now();
  const Forest f = Forest::single(t);
  const VertexId leaf = f.leftmost_leaf(0);
  const auto profiles = all_star_profiles(f);
  const std::size_t alpha = independence_number(f);
  Verdict verdict;
  verdict.check = "theorem-main";
  for (std::size_t g = 0; g < f.size() && verdict.passed; ++g) {
    for (std::size_t k = 1; k <= alpha; ++k) {
      ++verdict.instances;
      if (profiles[g][k] > profiles[static_cast<std::size_t>(leaf)][k]) {
        verdict.passed = false;
        Witness w;
        w.structure = serialize_tree(t);
        w.v = static_cast<VertexId>(g);
        w.other = leaf;
        w.k = k;
        w.detail = "star(v) = " + profiles[g][k].str() + " exceeds star(leaf) = " +
                   profiles[static_cast<std::size_t>(leaf)][k].str();
        verdict.witness = w;
        break;
      }
    }
  }
  verdict.elapsed_seconds = seconds_since(start);
  return verdict;
}

namespace {

HkReport report_from_profiles(const RootedTree& t, const CanonicalCode& code,
                              const std::vector<CountPolynomial>& profiles, std::size_t k) {
  HkReport r;
  r.tree = code;
  r.k = k;
  r.max_star_value = 0;
  r.best_leaf_value = 0;
  bool any = false;
  for (std::size_t g = 0; g < t.size(); ++g) {
    const BigCount& c = profiles[g][k];
    if (!any || c > r.max_star_value) {
      r.max_star_value = c;
      r.max_star_vertex = static_cast<VertexId>(g);
      any = true;
    }
    if (t.degree(static_cast<VertexId>(g)) <= 1 && c > r.best_leaf_value) r.best_leaf_value = c;
  }
  if (r.max_star_value == 0) r.max_star_vertex = kNoVertex;
  r.is_k_hk = r.best_leaf_value == r.max_star_value;
  return r;
}

}  // namespace

std::vector<HkReport> check_hk(const RootedTree& t, std::size_t k_max) {
  const Forest f = Forest::single(t);
  const auto profiles = all_star_profiles(f);
  const auto code = canonical_code(t);
  const std::size_t top = std::min(k_max, independence_number(t));
  std::vector<HkReport> out;
  for (std::size_t k = 1; k <= top; ++k) out.push_back(report_from_profiles(t, code, profiles, k));
  return out;
}

HkReport hk_report(const RootedTree& t, std::size_t k) {
  const Forest f = Forest::single(t);
  return report_from_profiles(t, canonical_code(t), all_star_profiles(f), k);
}

Verdict check_forest_theorem(const Forest& f) {
  const auto start = Clock::now();
  const LeafSelection sel = best_leaf(f);
  const auto profiles = all_star_profiles(f);
  const std::size_t alpha = independence_number(f);
  const auto& best = profiles[static_cast<std::size_t>(sel.leaf)];
  Verdict verdict;
  verdict.check = "forest-theorem";
  for (std::size_t g = 0; g < f.size() && verdict.passed; ++g) {
    for (std::size_t k = 1; k <= alpha; ++k) {
      ++verdict.instances;
      if (profiles[g][k] > best[k]) {
        verdict.passed = false;
        Witness w;
        w.structure = serialize_forest(f);
        w.v = static_cast<VertexId>(g);
        w.other = sel.leaf;
        w.k = k;
        w.detail = "star(v) = " + profiles[g][k].str() + " exceeds star(best leaf) = " + best[k].str();
        verdict.witness = w;
        break;
      }
    }
  }
  verdict.elapsed_seconds = seconds_since(start);
  return verdict;
}

Verdict check_forest_lemma(const Forest& f, VertexId l1, VertexId l2, ForestLemma lemma, DomainMode mode,
                           std::uint64_t full_limit) {
  const auto start = Clock::now();
  VertexId from = l1, to = l2;
  VertexSet window;
  if (lemma == ForestLemma::kArity) {
    window = arity_map_window(f, l1, l2);
  } else {
    window = level_map_window(f, l1, l2);
    if (f.tree(f.component(l1)).shape()->levels % 2 == 1) std::swap(from, to);
  }

  if (mode == DomainMode::kAuto) {
    BigCount total = 0;
    for (const auto& c : independence_profile(f).coefficients()) total += c;
    mode = total <= full_limit ? DomainMode::kFull : DomainMode::kWindow;
  }
  const bool windowed = mode == DomainMode::kWindow;
  const std::string name = std::string(lemma == ForestLemma::kArity ? "arity-lemma" : "level-lemma") +
                           (windowed ? "/window" : "/full");

  Witness base;
  base.structure = serialize_forest(f);
  base.v = l1;
  base.other = l2;
  InjectionAudit audit(f, base, to, from);
  const MapOptions opts{true, false};
  auto map = [&](const VertexSet& s) {
    VertexSet out = lemma == ForestLemma::kArity ? arity_map(f, l1, l2, s, opts).set : level_map(f, l1, l2, s, opts).set;
    if (windowed) {
      bool escaped = false;
      out.for_each([&](VertexId x) { escaped = escaped || !window.contains(x); });
      if (escaped) throw InvariantViolation("window.escape", "image leaves the map's window");
    }
    return out;
  };

  VertexSet req(f.size()), exc(f.size());
  req.insert(from);
  exc.insert(to);
  if (windowed)
    for (std::size_t g = 0; g < f.size(); ++g)
      if (!window.contains(static_cast<VertexId>(g))) exc.insert(static_cast<VertexId>(g));
  for_each_constrained_independent_set(f, req, exc, [&](const VertexSet& s) { audit_one(audit, s, map); });
  Verdict verdict = audit.finish(name, start);
  if (!verdict.passed) return verdict;

  // Independent DP cross-checks: the lemma's inequality for every k, and on
  // full runs the domain size itself.
  const auto from_star = star_profile(f, from);
  const auto to_star = star_profile(f, to);
  BigCount domain = 0;
  for (std::size_t k = 1; k < std::max(from_star.length(), to_star.length()); ++k) {
    domain += count_classes(f, from, to, k).a;
    if (from_star[k] > to_star[k]) {
      Witness w = base;
      w.k = k;
      w.detail = "DP star counts contradict the lemma's inequality";
      verdict.passed = false;
      verdict.witness = w;
      return verdict;
    }
  }
  if (!windowed && domain != verdict.instances) {
    Witness w = base;
    w.detail = "enumerated domain size " + std::to_string(verdict.instances) + " differs from DP count " + domain.str();
    verdict.passed = false;
    verdict.witness = w;
  }
  verdict.elapsed_seconds = seconds_since(start);
  return verdict;
}

std::vector<Forest> perfect_forest_pool(const std::vector<PerfectShape>& shapes, std::size_t min_parts,
                                        std::size_t max_parts, std::size_t max_vertices) {
  std::vector<Forest> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t vertices) -> void {
    if (pick.size() >= min_parts) {
      std::vector<RootedTree> trees;
      for (std::size_t i : pick) trees.push_back(build_perfect(shapes[i].arity, shapes[i].levels));
      out.emplace_back(std::move(trees));
    }
    if (pick.size() == max_parts) return;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const std::size_t n = perfect_size(shapes[i].arity, shapes[i].levels);
      if (vertices + n > max_vertices) continue;
      pick.push_back(i);
      self(self, vertices + n);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<LemmaInstance> lemma_instances(const std::vector<PerfectShape>& shapes, std::size_t max_vertices) {
  std::vector<LemmaInstance> out;
  for (const Forest& f : perfect_forest_pool(shapes, 2, 2, max_vertices)) {
    const auto s0 = *f.tree(0).shape(), s1 = *f.tree(1).shape();
    for (std::size_t first = 0; first < 2; ++first) {
      const auto& a = first == 0 ? s0 : s1;
      const auto& b = first == 0 ? s1 : s0;
      std::optional<ForestLemma> lemma;
      if (a.levels >= 2 && b.levels >= 2 && a.arity < b.arity) lemma = ForestLemma::kArity;
      if (a.arity == b.arity && a.levels < b.levels) lemma = ForestLemma::kLevel;
      if (!lemma) continue;
      const std::size_t second = 1 - first;
      const auto last = [&](std::size_t i) {
        return static_cast<VertexId>(f.offset(i) + f.tree(i).size() - 1);
      };
      out.push_back({f, f.leftmost_leaf(first), f.leftmost_leaf(second), *lemma});
      out.push_back({f, last(first), last(second), *lemma});
    }
  }
  return out;
}

std::vector<HkReport> hk_sweep(const std::vector<RootedTree>& trees, std::size_t k_max, unsigned workers) {
  std::vector<std::vector<HkReport>> slots(trees.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < trees.size(); i = next++) slots[i] = check_hk(trees[i], k_max);
  };
  workers = std::max(1u, workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::vector<HkReport> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::string to_json(const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["passed"] = v.passed;
  j["instances"] = v.instances;
  if (v.witness) {
    const Witness& w = *v.witness;
    Json wj;
    wj["structure"] = w.structure;
    wj["v"] = w.v == kNoVertex ? Json(nullptr) : Json(w.v);
    wj["other"] = w.other == kNoVertex ? Json(nullptr) : Json(w.other);
    wj["k"] = w.k;
    wj["set"] = format_ids(w.set);
    wj["second_set"] = format_ids(w.second_set);
    wj["detail"] = w.detail;
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

std::string to_json(const HkReport& r) {
  Json j;
  j["tree"] = r.tree.code;
  j["k"] = r.k;
  j["max_star_vertex"] = r.max_star_vertex == kNoVertex ? Json(nullptr) : Json(r.max_star_vertex);
  j["max_star_value"] = count_json(r.max_star_value);
  j["best_leaf_value"] = count_json(r.best_leaf_value);
  j["is_k_hk"] = r.is_k_hk;
  return j.dump();
}

}  // namespace hkstar
