// Command line front end. Every command writes one JSON document.
// Exit codes: 0 success, 1 failed verdict, 2 usage or input error.

#include "urysohn/approximation.hpp"
#include "urysohn/cantor.hpp"
#include "urysohn/checks.hpp"
#include "urysohn/construction.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/json_io.hpp"
#include "urysohn/rgraph.hpp"
#include "urysohn/spaces.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>

using namespace urysohn;

namespace {

struct Flags {
  std::string input, graph, space, target, output;
  std::string eps, r, by, weights, base, embedding, vertex_a, vertex_b, rule = "annealed";
  std::size_t depth = 0, budget = 50'000'000, samples = 1000, parts = 2, size = 3, arity = 2, points = 60, copies = 2;
  std::uint64_t seed = 1;
  bool depth_given = false, pretty = false;
};

struct Result {
  Json doc;
  int code = 0;
  std::string summary;
};

Rational flag_rational(const std::string& text, const char* name) {
  if (text.empty()) throw ParseError(std::string("--") + name + " is required");
  return parse_rational(text);
}

std::string need(const std::string& path, const char* name) {
  if (path.empty()) throw ParseError(std::string("--") + name + " is required");
  return path;
}

Result report_result(const CheckReport& report) {
  return {to_json(report), report.failed() ? 1 : 0, to_string(report.verdict)};
}

Json embedding_json(const FiniteMetricSpace& from, const FiniteMetricSpace& to, const std::vector<std::size_t>& map) {
  Json j = Json::object();
  for (std::size_t i = 0; i < map.size(); ++i) j[from.points()[i]] = to.points()[map[i]];
  return j;
}

std::vector<std::size_t> parse_index_list(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("expected a comma separated list of indices, got \"" + csv + "\"");
    }
  }
  return out;
}

BridgeDocument load_bridge(const Flags& f) {
  auto doc = bridge_from_json(read_json_file(need(f.input, "input")));
  if (f.depth_given) doc.depth = f.depth;
  return doc;
}

Json tree_json(const Tree& tree) {
  Json nodes = Json::array();
  for (const auto& n : tree.nodes) nodes.push_back(n.id());
  Json maximal = Json::object();
  for (const auto& [level, count] : tree.maximal_by_level) maximal[std::to_string(level)] = count;
  return Json{{"depth", tree.depth}, {"nodes", std::move(nodes)}, {"maximal_by_level", std::move(maximal)},
              {"graph", to_json(tree.graph)}};
}

// ---------------------------------------------------------------------------

Result set_check(const Flags& f) {
  const RSet set = rset_from_json(read_json_file(need(f.input, "input")));
  return report_result(check_associativity(set, f.samples, f.seed));
}

Result set_approx(const Flags& f) {
  const RSet set = rset_from_json(read_json_file(need(f.input, "input")));
  const std::vector<Rational> base = f.base.empty() ? std::vector<Rational>{} : parse_rational_list(f.base);
  std::optional<Rational> r;
  if (!f.r.empty()) r = parse_rational(f.r);
  const RSet out = make_eps_approximation(set, flag_rational(f.eps, "eps"), base, r);
  return {to_json(out), 0, std::to_string(out.interval_count()) + " points"};
}

Result set_scale(const Flags& f) {
  const RSet set = rset_from_json(read_json_file(need(f.input, "input")));
  return {to_json(scale(set, flag_rational(f.by, "by"))), 0, "scaled"};
}

Result set_truncate(const Flags& f) {
  const RSet set = rset_from_json(read_json_file(need(f.input, "input")));
  return {to_json(truncate(set, flag_rational(f.by, "by"))), 0, "truncated"};
}

Result set_union(const Flags& f) {
  const RSet set = rset_from_json(read_json_file(need(f.input, "input")));
  const auto u = translate_union(set, flag_rational(f.by, "by"), f.copies);
  return {Json{{"set", to_json(u.set)}, {"period", to_json(u.period)}, {"copies", u.copies}, {"note", u.note}}, 0,
          std::to_string(u.set.interval_count()) + " intervals"};
}

Result cantor_gen(const Flags& f) {
  if (f.weights.empty()) throw ParseError("--weights is required");
  const RSet set = cantor_set(WeightVector(parse_rational_list(f.weights)));
  return {to_json(set), 0, std::to_string(set.interval_count()) + " intervals"};
}

Result graph_check(const Flags& f) {
  const RGraph g = graph_from_json(read_json_file(need(f.graph, "graph")));
  return report_result(is_metric(g));
}

Result graph_complete(const Flags& f) {
  const RGraph g = graph_from_json(read_json_file(need(f.graph, "graph")));
  const auto space = complete_to_metric_space(g);
  return {to_json(space), 0, std::to_string(space.size()) + " points"};
}

Result graph_shortcut(const Flags& f) {
  const RGraph g = graph_from_json(read_json_file(need(f.graph, "graph")));
  const RGraph out = add_shortcut(g, g.index_of(need(f.vertex_a, "from")), g.index_of(need(f.vertex_b, "to")));
  return {to_json(out), 0, std::to_string(out.edges().size()) + " edges"};
}

Result graph_connect(const Flags& f) {
  const RGraph g = graph_from_json(read_json_file(need(f.graph, "graph")));
  const RGraph out = connect(g, flag_rational(f.r, "r"));
  return {to_json(out), 0, std::to_string(out.edges().size()) + " edges"};
}

Result construct_bridge(const Flags& f) {
  const auto doc = load_bridge(f);
  return {to_json(build_bridge_graph(doc.input)), 0, "bridge graph"};
}

Result construct_companion(const Flags& f) {
  const auto doc = load_bridge(f);
  return {to_json(derive_companion_W(doc.input)), 0, "companion space"};
}

Result construct_tree(const Flags& f) {
  const auto doc = load_bridge(f);
  const auto W = derive_companion_W(doc.input);
  const Tree tree = build_tree(doc.input, W, doc.depth);
  return {tree_json(tree), 0, std::to_string(tree.nodes.size()) + " nodes"};
}

Result construct_full(const Flags& f) {
  const auto doc = load_bridge(f);
  const Construction c = build_H_and_L(doc.input, doc.depth);
  Json j{{"W", to_json(c.W)},
         {"tree", tree_json(c.tree)},
         {"H", to_json(c.H)},
         {"H_metric", to_json(is_metric(c.H))},
         {"L", to_json(c.L)},
         {"comparable_pairs_checked", c.comparable_pairs_checked}};
  return {std::move(j), 0, std::to_string(c.L.size()) + " points in L"};
}

Result construct_copy(const Flags& f) {
  const auto doc = load_bridge(f);
  const Construction c = build_H_and_L(doc.input, doc.depth);
  std::vector<std::size_t> embedding;
  if (f.embedding.empty()) {
    embedding.resize(std::min(doc.depth, doc.input.U.size()));
    std::iota(embedding.begin(), embedding.end(), 0);
  } else {
    embedding = parse_index_list(f.embedding);
  }
  const NearbyCopy copy = find_nearby_copy(c.L, embedding, doc.input, doc.depth);
  Json dist = Json::array();
  for (const auto& d : copy.anchor_distances) dist.push_back(to_json(d));
  Json j{{"points", copy.points}, {"indices", copy.indices}, {"anchors", copy.anchors}, {"anchor_distances", dist}};
  return {std::move(j), 0, std::to_string(copy.points.size()) + " points"};
}

Result space_build(const Flags& f) {
  const RSet set = rset_from_json(read_json_file(need(f.input, "input")));
  SaturationOptions options;
  if (f.rule == "completion") {
    options.rule = ExtensionRule::Completion;
  } else if (f.rule != "annealed") {
    throw ParseError("--rule must be completion or annealed");
  }
  const auto out = build_saturated_space(set, f.points, f.arity, f.seed, options);
  Json j{{"space", to_json(out.space)}, {"saturated", out.saturated}, {"pending", out.pending}};
  return {std::move(j), 0,
          std::to_string(out.space.size()) + " points, " + (out.saturated ? "saturated" : "not saturated")};
}

Result space_universal(const Flags& f) {
  const auto M = space_from_json(read_json_file(need(f.space, "space")));
  const RSet set = f.input.empty() ? M.set() : rset_from_json(read_json_file(f.input));
  return report_result(check_universality(M, set, f.size, f.budget));
}

Result space_extension(const Flags& f) {
  const auto M = space_from_json(read_json_file(need(f.space, "space")));
  return report_result(check_extension_property(M, f.size, f.budget));
}

Result space_color(const Flags& f) {
  const auto M = space_from_json(read_json_file(need(f.space, "space")));
  const auto T = space_from_json(read_json_file(need(f.target, "target")));
  Coloring coloring;
  if (!f.input.empty()) {
    coloring = coloring_from_json(read_json_file(f.input), M);
  } else {
    if (f.parts == 0) throw ParseError("--parts must be positive");
    std::mt19937_64 rng(f.seed);
    for (std::size_t i = 0; i < M.size(); ++i) coloring.parts.push_back(rng() % f.parts);
  }
  const Rational eps = f.eps.empty() ? Rational(0) : parse_rational(f.eps);
  const auto found = indivisibility_search(M, coloring, T, eps, f.budget);
  Json j = coloring_to_json(M, coloring);
  j["found"] = found.has_value();
  if (found) {
    j["color"] = found->color;
    j["embedding"] = embedding_json(T, M, found->embedding);
  }
  return {std::move(j), 0, found ? "copy in color " + std::to_string(found->color) : "no copy"};
}

Result space_oscillate(const Flags& f) {
  const auto M = space_from_json(read_json_file(need(f.space, "space")));
  const auto T = space_from_json(read_json_file(need(f.target, "target")));
  const auto values = function_from_json(read_json_file(need(f.input, "input")), M);
  const auto found = oscillation_search(M, values, flag_rational(f.eps, "eps"), T, f.budget);
  Json j{{"found", found.has_value()}};
  if (found) j["embedding"] = embedding_json(T, M, *found);
  return {std::move(j), 0, found ? "copy found" : "no copy"};
}

Result space_embed(const Flags& f) {
  const auto M = space_from_json(read_json_file(need(f.space, "space")));
  const auto T = space_from_json(read_json_file(need(f.target, "target")));
  std::vector<std::size_t> all(M.size());
  std::iota(all.begin(), all.end(), 0);
  const auto found = find_embedding(T, M, all, f.budget);
  Json j{{"found", found.has_value()}};
  if (found) j["embedding"] = embedding_json(T, M, *found);
  return {std::move(j), 0, found ? "embedding found" : "no embedding"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance sets, R-graphs and finite Urysohn-type spaces"};
  app.require_subcommand(1);
  Flags f;
  std::function<Result(const Flags&)> action;

  auto common = [&](CLI::App* c) {
    c->add_option("--output", f.output, "Write the JSON here instead of standard output");
    c->add_flag("--pretty", f.pretty, "Indented JSON and a summary line on standard error");
  };
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help,
                  std::function<Result(const Flags&)> fn) {
    CLI::App* c = group->add_subcommand(name, help);
    common(c);
    c->callback([&action, fn] { action = fn; });
    return c;
  };

  auto* set = app.add_subcommand("set", "Distance set operations");
  set->require_subcommand(1);
  auto* c = leaf(set, "check", "Associativity of truncated addition", set_check);
  c->add_option("--input", f.input, "Distance set JSON");
  c->add_option("--samples", f.samples, "Random triples for interval sets");
  c->add_option("--seed", f.seed);
  c = leaf(set, "approx", "Finite subadditive closed eps-approximation", set_approx);
  c->add_option("--input", f.input, "Distance set JSON");
  c->add_option("--eps", f.eps, "P/Q");
  c->add_option("--r", f.r, "Minimum positive element, P/Q");
  c->add_option("--base", f.base, "Members to keep, CSV");
  c = leaf(set, "scale", "Multiply by a positive factor", set_scale);
  c->add_option("--input", f.input, "Distance set JSON");
  c->add_option("--by", f.by, "Factor, P/Q");
  c = leaf(set, "truncate", "Members up to a bound", set_truncate);
  c->add_option("--input", f.input, "Distance set JSON");
  c->add_option("--by", f.by, "Bound, P/Q");
  c = leaf(set, "union", "Union of translated copies", set_union);
  c->add_option("--input", f.input, "Distance set JSON");
  c->add_option("--by", f.by, "Period, P/Q");
  c->add_option("--copies", f.copies);

  auto* cantor = app.add_subcommand("cantor", "Cantor-type sets");
  cantor->require_subcommand(1);
  c = leaf(cantor, "gen", "Remove middle parts by weight", cantor_gen);
  c->add_option("--weights", f.weights, "CSV of weights in (0, 1)");

  auto* graph = app.add_subcommand("graph", "R-graphs");
  graph->require_subcommand(1);
  c = leaf(graph, "check", "Metric test", graph_check);
  c->add_option("--graph", f.graph, "Graph JSON");
  c = leaf(graph, "complete", "Completion to a metric space", graph_complete);
  c->add_option("--graph", f.graph, "Graph JSON");
  c = leaf(graph, "shortcut", "Add the edge {a, b} with the graph distance", graph_shortcut);
  c->add_option("--graph", f.graph, "Graph JSON");
  c->add_option("--from", f.vertex_a, "Vertex id");
  c->add_option("--to", f.vertex_b, "Vertex id");
  c = leaf(graph, "connect", "Join the components with weight r", graph_connect);
  c->add_option("--graph", f.graph, "Graph JSON");
  c->add_option("--r", f.r, "P/Q");

  auto* construct = app.add_subcommand("construct", "Bridge construction");
  construct->require_subcommand(1);
  for (auto [name, help, fn] : {std::tuple{"bridge", "Bridge graph of U and V", construct_bridge},
                                std::tuple{"companion", "Companion space W", construct_companion},
                                std::tuple{"tree", "Tree of partial isometries", construct_tree},
                                std::tuple{"full", "W, tree, H and L", construct_full},
                                std::tuple{"copy", "Copy of V near an embedded U", construct_copy}}) {
    c = leaf(construct, name, help, fn);
    c->add_option("--input", f.input, "Bridge input JSON");
    c->add_option("--depth", f.depth, "Overrides the depth in the input")->each([&](const std::string&) {
      f.depth_given = true;
    });
    if (std::string(name) == "copy") c->add_option("--embedding", f.embedding, "Images of u_0, u_1, ... as CSV");
  }

  auto* space = app.add_subcommand("space", "Finite metric spaces");
  space->require_subcommand(1);
  c = leaf(space, "build", "Katetov saturation", space_build);
  c->add_option("--input", f.input, "Finite distance set JSON");
  c->add_option("--points", f.points, "Maximum number of points");
  c->add_option("--arity", f.arity, "Witness arity");
  c->add_option("--seed", f.seed);
  c->add_option("--rule", f.rule, "annealed or completion");
  c = leaf(space, "universal", "Every small space embeds", space_universal);
  c->add_option("--space", f.space, "Metric space JSON");
  c->add_option("--input", f.input, "Distance set JSON, defaults to the space's set");
  c->add_option("--size", f.size, "Number of points");
  c->add_option("--budget", f.budget);
  c = leaf(space, "extension", "One-point extension of partial isometries", space_extension);
  c->add_option("--space", f.space, "Metric space JSON");
  c->add_option("--size", f.size, "Domain size");
  c->add_option("--budget", f.budget);
  c = leaf(space, "color", "Monochromatic copy search", space_color);
  c->add_option("--space", f.space, "Metric space JSON");
  c->add_option("--target", f.target, "Metric space JSON to find");
  c->add_option("--input", f.input, "Coloring JSON; otherwise a seeded random coloring");
  c->add_option("--parts", f.parts, "Colors of the random coloring");
  c->add_option("--seed", f.seed);
  c->add_option("--eps", f.eps, "P/Q, 0 by default");
  c->add_option("--budget", f.budget);
  c = leaf(space, "oscillate", "Copy with small oscillation", space_oscillate);
  c->add_option("--space", f.space, "Metric space JSON");
  c->add_option("--target", f.target, "Metric space JSON to find");
  c->add_option("--input", f.input, "Function JSON");
  c->add_option("--eps", f.eps, "P/Q");
  c->add_option("--budget", f.budget);
  c = leaf(space, "embed", "Isometric embedding", space_embed);
  c->add_option("--space", f.space, "Metric space JSON");
  c->add_option("--target", f.target, "Metric space JSON to find");
  c->add_option("--budget", f.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Result result;
  try {
    result = action(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = result.doc.dump(f.pretty ? 2 : -1) + "\n";
  if (f.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.output);
    if (!(out << text)) {
      std::cerr << "error: cannot write " << f.output << "\n";
      return 2;
    }
  }
  if (f.pretty) std::cerr << result.summary << "\n";
  return result.code;
}
