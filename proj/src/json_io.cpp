#include "urysohn/json_io.hpp"

#include "urysohn/errors.hpp"

#include <fstream>
#include <sstream>

namespace urysohn {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) throw ParseError(std::string("field \"") + name + "\" must be an array");
  return a;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t index_of_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::PassedExhaustive, Verdict::PassedHeuristic, Verdict::Failed}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("unknown verdict \"" + s + "\"");
}

// Point id -> value, one entry per point.
template <typename Read>
auto per_point(const Json& obj, const FiniteMetricSpace& space, const char* what, Read read) {
  if (!obj.is_object()) throw ParseError(std::string(what) + " must be an object keyed by point id");
  using T = decltype(read(obj));
  std::vector<T> out(space.size());
  std::vector<bool> seen(space.size(), false);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    std::size_t i;
    try {
      i = space.index_of(it.key());
    } catch (const Error&) {
      throw ParseError(std::string(what) + " names unknown point \"" + it.key() + "\"");
    }
    out[i] = read(it.value());
    seen[i] = true;
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!seen[i]) throw ParseError(std::string(what) + " has no entry for point \"" + space.points()[i] + "\"");
  }
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const RSet& set) {
  Json ivs = Json::array();
  for (const auto& iv : set.intervals()) ivs.push_back(Json::array({to_json(iv.lo), to_json(iv.hi)}));
  return Json{{"intervals", std::move(ivs)}};
}

RSet rset_from_json(const Json& j) {
  std::vector<Interval> ivs;
  for (const auto& iv : array_field(j, "intervals")) {
    if (!iv.is_array() || iv.size() != 2) throw ParseError("an interval must be a pair [lo, hi]");
    ivs.push_back({rational_from_json(iv[0]), rational_from_json(iv[1])});
  }
  if (ivs.empty()) throw ParseError("a distance set needs at least one interval");
  try {
    return RSet(std::move(ivs));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const CheckReport& report) {
  Json j;
  j["verdict"] = to_string(report.verdict);
  j["samples"] = report.sample_count;
  Json w = Json::object();
  for (const auto& [name, value] : report.witness) w[name] = to_json(value);
  j["witness"] = std::move(w);
  j["points"] = report.witness_points;
  if (report.lhs) j["lhs"] = to_json(*report.lhs);
  if (report.rhs) j["rhs"] = to_json(*report.rhs);
  j["method"] = report.method;
  j["notes"] = report.notes;
  return j;
}

CheckReport report_from_json(const Json& j) {
  CheckReport r;
  r.verdict = verdict_from_string(string_of(field(j, "verdict"), "verdict"));
  if (j.contains("samples")) r.sample_count = index_of_json(j["samples"], "samples");
  const Json& w = field(j, "witness");
  if (!w.is_object()) throw ParseError("witness must be an object");
  for (auto it = w.begin(); it != w.end(); ++it) r.witness.emplace_back(it.key(), rational_from_json(it.value()));
  if (j.contains("points")) {
    for (const auto& p : array_field(j, "points")) r.witness_points.push_back(string_of(p, "witness point"));
  }
  if (j.contains("lhs")) r.lhs = rational_from_json(j["lhs"]);
  if (j.contains("rhs")) r.rhs = rational_from_json(j["rhs"]);
  if (j.contains("method")) r.method = string_of(j["method"], "method");
  if (j.contains("notes")) {
    for (const auto& n : array_field(j, "notes")) r.notes.push_back(string_of(n, "note"));
  }
  return r;
}

Json to_json(const RGraph& graph) {
  Json edges = Json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back(Json::array({graph.vertices()[e.u], graph.vertices()[e.v], to_json(e.weight)}));
  }
  return Json{{"set", to_json(graph.set())}, {"vertices", graph.vertices()}, {"edges", std::move(edges)}};
}

RGraph graph_from_json(const Json& j) {
  RSet set = rset_from_json(field(j, "set"));
  std::vector<std::string> vertices;
  for (const auto& v : array_field(j, "vertices")) vertices.push_back(string_of(v, "vertex id"));
  RGraph g(std::move(set), std::move(vertices));
  for (const auto& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("an edge must be [u, v, weight]");
    g.add_edge(string_of(e[0], "edge endpoint"), string_of(e[1], "edge endpoint"), rational_from_json(e[2]));
  }
  return g;
}

Json to_json(const FiniteMetricSpace& space) {
  Json dist = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < space.size(); ++k) row.push_back(to_json(space.d(i, k)));
    dist.push_back(std::move(row));
  }
  return Json{{"set", to_json(space.set())}, {"points", space.points()}, {"dist", std::move(dist)}};
}

FiniteMetricSpace space_from_json(const Json& j) {
  RSet set = rset_from_json(field(j, "set"));
  std::vector<std::string> points;
  for (const auto& p : array_field(j, "points")) points.push_back(string_of(p, "point id"));
  std::vector<std::vector<Rational>> dist;
  for (const auto& row : array_field(j, "dist")) {
    if (!row.is_array()) throw ParseError("each row of dist must be an array");
    auto& out = dist.emplace_back();
    for (const auto& x : row) out.push_back(rational_from_json(x));
  }
  return FiniteMetricSpace(std::move(set), std::move(points), std::move(dist));
}

Json to_json(const BridgeDocument& doc) {
  const auto& in = doc.input;
  return Json{{"set", to_json(in.set)}, {"U", to_json(in.U)}, {"V", to_json(in.V)},
              {"I", in.I},          {"r", to_json(in.r)}, {"depth", doc.depth}};
}

BridgeDocument bridge_from_json(const Json& j) {
  RSet set = rset_from_json(field(j, "set"));
  FiniteMetricSpace U = space_from_json(field(j, "U"));
  FiniteMetricSpace V = space_from_json(field(j, "V"));
  std::vector<std::size_t> I;
  for (const auto& i : array_field(j, "I")) I.push_back(index_of_json(i, "an entry of I"));
  Rational r = rational_from_json(field(j, "r"));
  std::size_t depth = j.contains("depth") ? index_of_json(j["depth"], "depth") : 0;
  return {BridgeInput{std::move(set), std::move(U), std::move(V), std::move(I), std::move(r)}, depth};
}

Json coloring_to_json(const FiniteMetricSpace& space, const Coloring& coloring) {
  Json parts = Json::object();
  for (std::size_t i = 0; i < space.size(); ++i) parts[space.points()[i]] = coloring.parts.at(i);
  return Json{{"parts", std::move(parts)}};
}

Coloring coloring_from_json(const Json& j, const FiniteMetricSpace& space) {
  return {per_point(field(j, "parts"), space, "parts", [](const Json& v) { return index_of_json(v, "a color"); })};
}

Json function_to_json(const FiniteMetricSpace& space, const std::vector<Rational>& values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < space.size(); ++i) out[space.points()[i]] = to_json(values.at(i));
  return Json{{"values", std::move(out)}};
}

std::vector<Rational> function_from_json(const Json& j, const FiniteMetricSpace& space) {
  return per_point(field(j, "values"), space, "values", [](const Json& v) { return rational_from_json(v); });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace urysohn
