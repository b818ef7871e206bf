#include "urysohn/rgraph.hpp"

#include "urysohn/checks.hpp"
#include "urysohn/errors.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace urysohn {

RGraph::RGraph(RSet set, std::vector<std::string> vertices) : set_(std::move(set)) {
  require_associative(set_);
  for (auto& v : vertices) add_vertex(std::move(v));
}

std::uint64_t RGraph::key(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

std::size_t RGraph::add_vertex(std::string id) {
  const std::size_t idx = vertices_.size();
  if (!index_.emplace(id, idx).second) throw ParameterError("duplicate vertex id '" + id + "'");
  vertices_.push_back(std::move(id));
  adj_.emplace_back();
  return idx;
}

void RGraph::add_edge(std::size_t u, std::size_t v, const Rational& weight) {
  if (u >= vertices_.size() || v >= vertices_.size()) throw ParameterError("edge endpoint out of range");
  if (u == v) throw ParameterError("loop at '" + vertices_[u] + "'");
  if (weight <= 0) throw ParameterError("edge weight must be positive, got " + to_string(weight));
  if (!set_.contains(weight)) throw ParameterError("edge weight " + to_string(weight) + " not in " + to_string(set_));
  if (!edge_index_.emplace(key(u, v), edges_.size()).second) {
    throw EdgeExistsError("edge {" + vertices_[u] + ", " + vertices_[v] + "} already present");
  }
  adj_[u].emplace_back(v, edges_.size());
  adj_[v].emplace_back(u, edges_.size());
  edges_.push_back({u, v, weight});
}

void RGraph::add_edge(const std::string& u, const std::string& v, const Rational& weight) {
  add_edge(index_of(u), index_of(v), weight);
}

std::size_t RGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw ParameterError("unknown vertex '" + id + "'");
  return it->second;
}

bool RGraph::has_edge(std::size_t u, std::size_t v) const { return edge_index_.count(key(u, v)) > 0; }

std::optional<Rational> RGraph::weight(std::size_t u, std::size_t v) const {
  auto it = edge_index_.find(key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return edges_[it->second].weight;
}

Rational walk_weight(const RGraph& graph, std::span<const std::size_t> walk) {
  if (walk.empty()) throw NotAWalkError("empty walk");
  Rational acc = 0;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    auto w = graph.weight(walk[i], walk[i + 1]);
    if (!w) throw NotAWalkError("no edge between positions " + std::to_string(i) + " and " + std::to_string(i + 1));
    acc = i == 0 ? *w : oplus(graph.set(), acc, *w);
  }
  return acc;
}

namespace {

struct Labels {
  std::vector<std::optional<Rational>> value;
  std::vector<std::size_t> parent;
};

Labels label_setting(const RGraph& graph, std::size_t source) {
  const std::size_t n = graph.vertex_count();
  if (source >= n) throw ParameterError("vertex index out of range");
  Labels out{std::vector<std::optional<Rational>>(n), std::vector<std::size_t>(n, n)};
  std::vector<bool> settled(n, false);
  using Item = std::pair<Rational, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  out.value[source] = Rational(0);
  queue.emplace(Rational(0), source);
  const auto& set = graph.set();
  while (!queue.empty()) {
    auto [val, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = true;
    for (const auto& [w, e] : graph.neighbors(v)) {
      if (settled[w]) continue;
      const auto& ew = graph.edges()[e].weight;
      Rational cand = v == source ? ew : *set.sup_below(val + ew);
      if (!out.value[w] || cand < *out.value[w]) {
        out.value[w] = cand;
        out.parent[w] = v;
        queue.emplace(std::move(cand), w);
      }
    }
  }
  return out;
}

std::vector<std::size_t> trail_to(const Labels& labels, std::size_t source, std::size_t target) {
  std::vector<std::size_t> trail{target};
  while (trail.back() != source) trail.push_back(labels.parent[trail.back()]);
  std::reverse(trail.begin(), trail.end());
  return trail;
}

}  // namespace

PathResult distance(const RGraph& graph, std::size_t a, std::size_t b) {
  if (b >= graph.vertex_count()) throw ParameterError("vertex index out of range");
  auto labels = label_setting(graph, a);
  if (!labels.value[b]) {
    throw DisconnectedError("no walk between '" + graph.vertices()[a] + "' and '" + graph.vertices()[b] + "'");
  }
  return {*labels.value[b], trail_to(labels, a, b)};
}

std::vector<std::optional<Rational>> distances_from(const RGraph& graph, std::size_t source) {
  return label_setting(graph, source).value;
}

CheckReport is_metric(const RGraph& graph) {
  CheckReport report;
  report.method = "label-setting";
  const std::size_t n = graph.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    if (graph.neighbors(u).empty()) continue;
    auto labels = label_setting(graph, u);
    for (const auto& [v, e] : graph.neighbors(u)) {
      if (v < u) continue;
      const auto& w = graph.edges()[e].weight;
      if (*labels.value[v] < w) {
        report.verdict = Verdict::Failed;
        for (auto t : trail_to(labels, u, v)) report.witness_points.push_back(graph.vertices()[t]);
        report.lhs = w;
        report.rhs = *labels.value[v];
        report.notes.push_back("edge {" + graph.vertices()[u] + ", " + graph.vertices()[v] + "} has weight " +
                               to_string(w) + " but a trail of weight " + to_string(*labels.value[v]));
        return report;
      }
    }
  }
  return report;
}

bool is_regular(const RGraph&) { return true; }

namespace {

class InducedCycles {
 public:
  InducedCycles(const RGraph& graph, std::size_t max_len) : graph_(graph), max_len_(max_len) {}

  CycleSearch run() {
    CycleSearch out;
    out.complete = max_len_ >= graph_.vertex_count();
    for (std::size_t s = 0; s < graph_.vertex_count() && !found_; ++s) {
      path_ = {s};
      extend();
    }
    out.witness = std::move(found_);
    return out;
  }

 private:
  // path_[0] is the least vertex of the cycle; each new vertex must avoid
  // chords to every path vertex except its predecessor, and may touch
  // path_[0] only as the closing vertex.
  void extend() {
    if (found_) return;
    const std::size_t s = path_.front();
    const std::size_t last = path_.back();
    for (const auto& [v, e] : graph_.neighbors(last)) {
      (void)e;
      if (v <= s || std::find(path_.begin(), path_.end(), v) != path_.end()) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
        if (graph_.has_edge(v, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      const bool closes = graph_.has_edge(v, s);
      if (closes) {
        if (path_.size() >= 2 && path_[1] < v) {
          path_.push_back(v);
          examine();
          path_.pop_back();
          if (found_) return;
        }
        // A vertex adjacent to the start cannot sit inside an induced path.
        if (path_.size() > 1) continue;
      }
      if (path_.size() + 1 >= max_len_) continue;
      path_.push_back(v);
      extend();
      path_.pop_back();
      if (found_) return;
    }
  }

  void examine() {
    const std::size_t k = path_.size();
    std::vector<Rational> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = *graph_.weight(path_[i], path_[(i + 1) % k]);
    for (std::size_t i = 0; i < k; ++i) {
      Rational rest = w[(i + 1) % k];
      for (std::size_t j = 2; j < k; ++j) rest = oplus(graph_.set(), rest, w[(i + j) % k]);
      if (w[i] > rest) {
        found_ = CycleWitness{path_, i, w[i], rest};
        return;
      }
    }
  }

  const RGraph& graph_;
  std::size_t max_len_;
  std::vector<std::size_t> path_;
  std::optional<CycleWitness> found_;
};

std::vector<std::size_t> components(const RGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> comp(n, n);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& [w, e] : graph.neighbors(v)) {
        (void)e;
        if (comp[w] == n) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

CycleSearch find_nonmetric_cycle(const RGraph& graph, std::size_t max_len) {
  if (max_len < 3) return {std::nullopt, graph.vertex_count() < 3};
  return InducedCycles(graph, max_len).run();
}

RGraph connect(const RGraph& graph, const Rational& r) {
  if (r <= 0 || !graph.set().contains(r)) {
    throw ParameterError("connecting weight " + to_string(r) + " must be a positive member of " + to_string(graph.set()));
  }
  const auto comp = components(graph);
  std::vector<std::size_t> reps;
  std::vector<bool> seen(graph.vertex_count(), false);
  for (std::size_t v = 0; v < comp.size(); ++v) {
    if (!seen[comp[v]]) {
      seen[comp[v]] = true;
      reps.push_back(v);
    }
  }
  RGraph out = graph;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) out.add_edge(reps[i], reps[j], r);
  }
  return out;
}

RGraph add_shortcut(const RGraph& graph, std::size_t a, std::size_t b) {
  if (a == b) throw ParameterError("shortcut endpoints must differ");
  if (graph.has_edge(a, b)) {
    throw EdgeExistsError("edge {" + graph.vertices()[a] + ", " + graph.vertices()[b] + "} already present");
  }
  const auto d = distance(graph, a, b);
  RGraph out = graph;
  out.add_edge(a, b, d.value);
  return out;
}

std::vector<std::vector<Rational>> all_pairs_distances(const RGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t s = 0; s < n; ++s) {
    auto labels = label_setting(graph, s);
    for (std::size_t t = 0; t < n; ++t) {
      if (!labels.value[t]) {
        throw DisconnectedError("no walk between '" + graph.vertices()[s] + "' and '" + graph.vertices()[t] + "'");
      }
      out[s][t] = std::move(*labels.value[t]);
    }
  }
  return out;
}

FiniteMetricSpace complete_to_metric_space(const RGraph& graph) {
  auto report = is_metric(graph);
  if (report.failed()) throw NotMetricError(report.notes.front());
  auto dist = all_pairs_distances(graph);
  try {
    return FiniteMetricSpace(graph.set(), graph.vertices(), std::move(dist));
  } catch (const ParameterError& e) {
    throw CompletionError(std::string("completion is not a metric space: ") + e.what());
  }
}

RGraph as_graph(const FiniteMetricSpace& space) {
  RGraph g(space.set(), space.points());
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) g.add_edge(i, j, space.d(i, j));
  }
  return g;
}

}  // namespace urysohn
