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

#include "hkstar/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <sstream>
#include <thread>

#include "hkstar/canonical.hpp"
#include "hkstar/counting.hpp"
#include "hkstar/errors.hpp"
#include "hkstar/families.hpp"
#include "hkstar/forest_maps.hpp"
#include "hkstar/injections.hpp"
#include "hkstar/verify.hpp"

namespace hkstar {
namespace {

// Input problems found after parsing; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VertexSet make_set(std::size_t universe, const std::vector<VertexId>& ids) {
  for (VertexId v : ids)
    if (v < 0 || static_cast<std::size_t>(v) >= universe)
      throw UsageError("set member " + std::to_string(v) + " out of range");
  return VertexSet(universe, std::span<const VertexId>(ids));
}

void require_vertex(std::size_t universe, VertexId v, const char* flag) {
  if (v < 0 || static_cast<std::size_t>(v) >= universe)
    throw UsageError(std::string(flag) + " " + std::to_string(v) + " out of range");
}

// "d3" / "u11" / plain global ids, for the stand-alone CAS host.
std::vector<VertexId> parse_cas_ids(const std::string& text, std::size_t td_size, std::size_t tu_size) {
  std::vector<VertexId> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) throw UsageError("empty entry in --set");
    std::size_t offset = 0, limit = td_size + tu_size;
    std::string_view digits = tok;
    if (tok[0] == 'd' || tok[0] == 'u') {
      digits.remove_prefix(1);
      offset = tok[0] == 'u' ? td_size : 0;
      limit = tok[0] == 'u' ? tu_size : td_size;
    }
    long long value = -1;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 0 ||
        static_cast<std::size_t>(value) >= limit)
      throw UsageError("bad --set entry '" + tok + "'");
    out.push_back(static_cast<VertexId>(offset + static_cast<std::size_t>(value)));
  }
  return out;
}

std::string labelled_set(const VertexSet& s, const Labeler& label) {
  std::string out;
  s.for_each([&](VertexId v) {
    if (!out.empty()) out += ',';
    out += label ? label(v) : std::to_string(v);
  });
  return out;
}

struct Io {
  std::ostringstream out, err;
  int status = 0;
  void verdict(const Verdict& v) {
    out << to_json(v) << '\n';
    err << v.check << ": " << v.instances << " instances in " << v.elapsed_seconds << " s\n";
    if (!v.passed) status = 1;
  }
};

const std::vector<PerfectShape> kForestPool = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}};
const std::vector<std::string> kMainSuite = {"perfect:2:2", "perfect:2:3", "perfect:2:4", "perfect:2:5",
                                             "perfect:3:2", "perfect:3:3", "perfect:4:2"};
const std::vector<std::string> kInjectionSuite = {"perfect:2:4", "perfect:2:5", "perfect:3:3"};

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Stars of independent sets in trees and forests", "hkstar"};
  app.require_subcommand(1);
  Io io;

  std::string tree_spec, forest_spec, td_spec, tu_spec, set_text;
  VertexId vertex = -1, leaf = -1;
  std::size_t k = 0;
  bool trace = false;

  auto* count = app.add_subcommand("count", "Size-k independent sets containing a vertex");
  count->add_option("--tree", tree_spec, "Tree file or perfect:<r>:<h>")->required();
  count->add_option("--vertex", vertex)->required();
  count->add_option("--k", k)->required();

  auto* profile = app.add_subcommand("profile", "Independent-set counts for every size");
  profile->add_option("--tree", tree_spec)->required();
  auto* profile_vertex = profile->add_option("--vertex", vertex, "Restrict to sets containing this vertex");

  auto* classes = app.add_subcommand("classes", "Sizes of the families A, B, C for (v, leaf)");
  classes->add_option("--tree", tree_spec)->required();
  classes->add_option("--v", vertex)->required();
  classes->add_option("--leaf", leaf)->required();
  classes->add_option("--k", k)->required();

  auto* map = app.add_subcommand("map", "Apply the star-to-leaf injection");
  map->add_option("--tree", tree_spec)->required();
  map->add_option("--v", vertex)->required();
  map->add_option("--set", set_text, "Comma-separated ids")->required();
  map->add_flag("--trace", trace);

  auto* cas_cmd = app.add_subcommand("cas", "Conditional alternating swap between two perfect trees");
  cas_cmd->add_option("--td", td_spec)->required();
  cas_cmd->add_option("--tu", tu_spec)->required();
  cas_cmd->add_option("--set", set_text, "Ids as d<i>, u<j> or global integers")->required();
  cas_cmd->add_flag("--trace", trace);

  auto* best = app.add_subcommand("best-leaf", "Leaf with the largest star in a perfect forest");
  best->add_option("--forest", forest_spec, "Forest file or shorthands joined by '+'")->required();

  std::string what;
  std::size_t n_max = 10, k_max = 4, max_vertices = 60;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string source = "trees";
  std::optional<std::size_t> verify_k;
  bool lemmas = false, all_reports = false;
  auto* verify = app.add_subcommand("verify", "Exhaustive checks; one JSON verdict per line");
  verify->add_option("check", what, "injection | main | forest | hk")
      ->required()
      ->check(CLI::IsMember({"injection", "main", "forest", "hk"}));
  verify->add_option("--tree", tree_spec, "injection/main: a single tree instead of the default suite");
  verify->add_option("--forest", forest_spec, "forest: a single forest instead of the default pool");
  verify->add_option("--k", verify_k, "injection: a single set size");
  verify->add_option("--n-max", n_max, "hk: largest tree size");
  verify->add_option("--k-max", k_max, "hk: largest k (0 = all)");
  verify->add_option("--workers", workers, "hk: worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--source", source, "hk: trees | spiders | caterpillars")
      ->check(CLI::IsMember({"trees", "spiders", "caterpillars"}));
  verify->add_option("--max-vertices", max_vertices, "forest: vertex cap for the default pool");
  verify->add_flag("--lemmas", lemmas, "forest: also check the leaf-to-leaf injections");
  verify->add_flag("--all", all_reports, "hk: print every report, not just failures");

  std::size_t enum_n = 0;
  auto* enum_trees = app.add_subcommand("enum-trees", "One tree per isomorphism class");
  enum_trees->add_option("--n", enum_n)->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  }

  try {
    if (*count) {
      const Forest f = Forest::single(load_tree(tree_spec));
      require_vertex(f.size(), vertex, "--vertex");
      io.out << count_star(f, vertex, k) << '\n';
    } else if (*profile) {
      const Forest f = Forest::single(load_tree(tree_spec));
      if (*profile_vertex) {
        require_vertex(f.size(), vertex, "--vertex");
        io.out << star_profile(f, vertex).to_string() << '\n';
      } else {
        io.out << independence_profile(f).to_string() << '\n';
      }
    } else if (*classes) {
      const Forest f = Forest::single(load_tree(tree_spec));
      require_vertex(f.size(), vertex, "--v");
      require_vertex(f.size(), leaf, "--leaf");
      const ClassSizes c = count_classes(f, vertex, leaf, k);
      io.out << "a=" << c.a << " b=" << c.b << " c=" << c.c << '\n';
    } else if (*map) {
      const Forest f = Forest::single(load_tree(tree_spec));
      require_vertex(f.size(), vertex, "--v");
      const VertexSet input = make_set(f.size(), parse_id_list(set_text));
      const MapResult r = map_star(f, vertex, input, {true, trace});
      io.out << format_ids(r.set) << '\n';
      if (trace) io.out << format_trace(r.trace);
    } else if (*cas_cmd) {
      const RootedTree td = load_tree(td_spec), tu = load_tree(tu_spec);
      const VertexSet input = make_set(td.size() + tu.size(), parse_cas_ids(set_text, td.size(), tu.size()));
      const MapResult r = cas(td, tu, input, {true, trace});
      const Labeler label = cas_labeler(td);
      io.out << labelled_set(r.set, label) << '\n';
      if (trace) io.out << format_trace(r.trace, label);
    } else if (*best) {
      const Forest f = load_forest(forest_spec);
      const LeafSelection sel = best_leaf(f);
      io.out << "tree=" << sel.tree_index << " leaf=" << sel.leaf << " rule=" << rule_name(sel.rule) << '\n';
    } else if (*enum_trees) {
      const auto trees = enumerate_unlabeled_trees(enum_n, std::max(enum_n, kDefaultTreeCap));
      for (const auto& t : trees) {
        std::string line = serialize_tree(t);
        std::replace(line.begin(), line.end(), '\n', ' ');
        line.pop_back();
        io.out << line << '\n';
      }
      io.err << trees.size() << " trees on " << enum_n << " vertices\n";
    } else if (what == "injection") {
      const auto suite = tree_spec.empty() ? kInjectionSuite : std::vector<std::string>{tree_spec};
      for (const auto& spec : suite) {
        const RootedTree t = load_tree(spec);
        for (VertexId v : leftmost_path(t, t.root())) {
          if (v == t.leftmost_leaf()) continue;
          io.verdict(check_injection_exhaustive(t, v, verify_k));
        }
      }
    } else if (what == "main") {
      const auto suite = tree_spec.empty() ? kMainSuite : std::vector<std::string>{tree_spec};
      for (const auto& spec : suite) io.verdict(check_theorem_main(load_tree(spec)));
    } else if (what == "forest") {
      const auto forests = forest_spec.empty() ? perfect_forest_pool(kForestPool, 2, 3, max_vertices)
                                               : std::vector<Forest>{load_forest(forest_spec)};
      for (const auto& f : forests) io.verdict(check_forest_theorem(f));
      if (lemmas) {
        if (forest_spec.empty()) {
          for (const auto& inst : lemma_instances(kForestPool, max_vertices))
            io.verdict(check_forest_lemma(inst.forest, inst.l1, inst.l2, inst.lemma));
        } else {
          io.err << "--lemmas applies to the default pool only\n";
        }
      }
    } else if (what == "hk") {
      std::vector<RootedTree> trees;
      if (source == "trees") {
        for (std::size_t n = 1; n <= n_max; ++n) {
          auto batch = enumerate_unlabeled_trees(n, std::max(n_max, kDefaultTreeCap));
          trees.insert(trees.end(), batch.begin(), batch.end());
        }
      } else {
        trees = source == "spiders" ? all_spiders(n_max) : all_caterpillars(n_max);
      }
      const std::size_t k_cap = k_max == 0 ? std::numeric_limits<std::size_t>::max() : k_max;
      const auto reports = hk_sweep(trees, k_cap, workers);
      Verdict summary;
      summary.check = "hk/" + source;
      for (const auto& r : reports) {
        ++summary.instances;
        if (all_reports || !r.is_k_hk) io.out << to_json(r) << '\n';
        if (!r.is_k_hk && summary.passed) {
          summary.passed = false;
          Witness w;
          w.structure = serialize_tree(tree_from_code(r.tree.code));
          w.v = r.max_star_vertex;
          w.k = r.k;
          w.detail = "no leaf attains the maximum star";
          summary.witness = w;
        }
      }
      io.err << trees.size() << " trees\n";
      io.verdict(summary);
    }
  } catch (const InvariantViolation& e) {
    io.err << "invariant violated: " << e.what() << '\n';
    return {1, io.out.str(), io.err.str()};
  } catch (const ParseError& e) {
    return {2, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    return {2, "", std::string("invalid input: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return {2, "", std::string("invalid input: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, "", std::string("invalid input: ") + e.what() + "\n"};
  }
  return {io.status, io.out.str(), io.err.str()};
}

}  // namespace hkstar
