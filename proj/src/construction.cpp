#include "urysohn/construction.hpp"

#include "urysohn/errors.hpp"

#include <algorithm>
#include <set>

namespace urysohn {

void validate(const BridgeInput& in) {
  const std::size_t n = in.U.size();
  if (in.r <= 0 || !in.set.contains(in.r)) {
    throw ParameterError("r = " + to_string(in.r) + " must be a positive member of " + to_string(in.set));
  }
  if (in.I.size() != in.V.size()) {
    throw ParameterError("I has " + std::to_string(in.I.size()) + " entries for " + std::to_string(in.V.size()) +
                         " points of V");
  }
  std::set<std::size_t> seen;
  for (auto i : in.I) {
    if (i >= n) throw ParameterError("index " + std::to_string(i) + " in I is out of range for U");
    if (!seen.insert(i).second) throw ParameterError("index " + std::to_string(i) + " repeats in I");
  }
  for (const auto& p : in.V.points()) {
    if (std::find(in.U.points().begin(), in.U.points().end(), p) != in.U.points().end()) {
      throw ParameterError("point id '" + p + "' is shared by U and V");
    }
  }
  for (const auto* space : {&in.U, &in.V}) {
    for (const auto& v : space->distance_values()) {
      if (!in.set.contains(v)) throw ParameterError("distance " + to_string(v) + " not in " + to_string(in.set));
    }
  }
  for (std::size_t a = 0; a < in.I.size(); ++a) {
    for (std::size_t b = a + 1; b < in.I.size(); ++b) {
      const Rational gap = abs(in.U.d(in.I[a], in.I[b]) - in.V.d(a, b));
      if (gap > in.r) {
        throw HypothesisError("|dU(u" + std::to_string(in.I[a]) + ",u" + std::to_string(in.I[b]) + ") - dV(" +
                              in.V.points()[a] + "," + in.V.points()[b] + ")| = " + to_string(gap) + " exceeds r");
      }
    }
  }
}

RGraph build_bridge_graph(const BridgeInput& in) {
  validate(in);
  std::vector<std::string> ids = in.U.points();
  ids.insert(ids.end(), in.V.points().begin(), in.V.points().end());
  RGraph g(in.set, std::move(ids));
  const std::size_t n = in.U.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j, in.U.d(i, j));
  }
  for (std::size_t a = 0; a < in.V.size(); ++a) {
    for (std::size_t b = a + 1; b < in.V.size(); ++b) g.add_edge(n + a, n + b, in.V.d(a, b));
  }
  for (std::size_t a = 0; a < in.I.size(); ++a) g.add_edge(in.I[a], n + a, in.r);
  return g;
}

FiniteMetricSpace derive_companion_W(const BridgeInput& in) {
  const auto M = complete_to_metric_space(build_bridge_graph(in));
  const std::size_t n = in.U.size();
  std::vector<std::size_t> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = i;
  for (std::size_t a = 0; a < in.I.size(); ++a) f[in.I[a]] = n + a;
  std::vector<std::string> ids;
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("w" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = M.d(f[i], f[j]);
  }
  return FiniteMetricSpace(in.set, std::move(ids), std::move(dist));
}

std::string TreeNode::id() const {
  std::string out = "P[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(map[i]);
  }
  return out + "]";
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const FiniteMetricSpace& U, std::size_t depth, std::size_t cap) : U_(U), depth_(depth), cap_(cap) {}

  std::vector<TreeNode> run() {
    for (std::size_t j = 0; j < U_.size() && depth_ > 0; ++j) {
      map_ = {j};
      visit();
    }
    return std::move(nodes_);
  }

 private:
  void visit() {
    if (nodes_.size() >= cap_) {
      throw BudgetError("tree exceeds the node cap of " + std::to_string(cap_));
    }
    nodes_.push_back({map_});
    const std::size_t next = map_.size();
    if (next >= depth_ || next >= U_.size()) return;
    for (std::size_t j = map_.back() + 1; j < U_.size(); ++j) {
      bool iso = true;
      for (std::size_t i = 0; i < next && iso; ++i) iso = U_.d(j, map_[i]) == U_.d(next, i);
      if (!iso) continue;
      map_.push_back(j);
      visit();
      map_.pop_back();
    }
  }

  const FiniteMetricSpace& U_;
  std::size_t depth_;
  std::size_t cap_;
  std::vector<std::size_t> map_;
  std::vector<TreeNode> nodes_;
};

void require_W(const BridgeInput& in, const FiniteMetricSpace& W) {
  if (W.size() != in.U.size()) {
    throw ParameterError("W has " + std::to_string(W.size()) + " points, U has " + std::to_string(in.U.size()));
  }
}

}  // namespace

Tree build_tree(const BridgeInput& in, const FiniteMetricSpace& W, std::size_t depth, const TreeOptions& options) {
  require_W(in, W);
  auto nodes = TreeBuilder(in.U, depth, options.node_cap).run();
  std::vector<std::string> ids;
  ids.reserve(nodes.size());
  for (const auto& node : nodes) ids.push_back(node.id());
  RGraph g(in.set, std::move(ids));
  std::map<std::size_t, std::size_t> maximal;
  // Depth-first order keeps each node's ancestors on the stack.
  std::vector<std::size_t> stack;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const std::size_t level = nodes[k].level();
    stack.resize(level);
    for (auto a : stack) g.add_edge(a, k, W.d(nodes[a].level(), level));
    stack.push_back(k);
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const bool has_child = k + 1 < nodes.size() && nodes[k + 1].level() == nodes[k].level() + 1;
    if (!has_child) ++maximal[nodes[k].level()];
  }
  return {depth, std::move(nodes), std::move(g), std::move(maximal)};
}

Construction build_H_and_L(const BridgeInput& in, std::size_t depth, const TreeOptions& options) {
  auto W = derive_companion_W(in);
  auto tree = build_tree(in, W, depth, options);
  const std::size_t n = in.U.size();
  std::vector<std::string> ids = in.U.points();
  for (const auto& id : tree.graph.vertices()) ids.push_back(id);
  RGraph H(in.set, std::move(ids));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) H.add_edge(i, j, in.U.d(i, j));
  }
  for (const auto& e : tree.graph.edges()) H.add_edge(n + e.u, n + e.v, e.weight);
  for (std::size_t k = 0; k < tree.nodes.size(); ++k) H.add_edge(n + k, tree.nodes[k].anchor(), in.r);

  std::size_t checked = 0;
  for (const auto& e : tree.graph.edges()) {
    const Rational gap = abs(e.weight - in.U.d(tree.nodes[e.u].anchor(), tree.nodes[e.v].anchor()));
    if (gap > in.r) {
      throw MetricityError("anchor inequality fails on " + tree.nodes[e.u].id() + ", " + tree.nodes[e.v].id());
    }
    ++checked;
  }
  auto report = is_metric(H);
  if (report.failed()) throw MetricityError("H is not metric: " + report.notes.front());
  auto L = complete_to_metric_space(H);
  return {std::move(W), std::move(tree), std::move(H), std::move(L), checked};
}

NearbyCopy find_nearby_copy(const FiniteMetricSpace& L, const std::vector<std::size_t>& embedding,
                            const BridgeInput& in, std::size_t depth) {
  const auto& U = in.U;
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    if (embedding[i] >= U.size()) throw NotAnEmbeddingError("image index " + std::to_string(embedding[i]) + " out of range");
    if (i > 0 && embedding[i] <= embedding[i - 1]) throw NotAnEmbeddingError("embedding is not increasing");
    for (std::size_t j = 0; j < i; ++j) {
      if (U.d(embedding[i], embedding[j]) != U.d(i, j)) {
        throw NotAnEmbeddingError("embedding changes d(u" + std::to_string(j) + ",u" + std::to_string(i) + ")");
      }
    }
  }
  const std::size_t len = std::min(depth, embedding.size());
  // V's rows in enumeration order of their indices.
  std::vector<std::size_t> rows;
  for (std::size_t a = 0; a < in.I.size(); ++a) {
    if (in.I[a] < len) rows.push_back(a);
  }
  std::sort(rows.begin(), rows.end(), [&](auto x, auto y) { return in.I[x] < in.I[y]; });
  NearbyCopy out;
  for (auto a : rows) {
    const std::size_t i = in.I[a];
    TreeNode node{std::vector<std::size_t>(embedding.begin(), embedding.begin() + static_cast<std::ptrdiff_t>(i) + 1)};
    out.indices.push_back(i);
    out.points.push_back(node.id());
    out.anchors.push_back(U.points()[node.anchor()]);
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Rational d = L.d(out.points[k], out.anchors[k]);
    if (d > in.r) throw CheckFailedError(out.points[k] + " is farther than r from its anchor");
    out.anchor_distances.push_back(std::move(d));
    for (std::size_t m = 0; m < k; ++m) {
      if (L.d(out.points[k], out.points[m]) != in.V.d(rows[k], rows[m])) {
        throw CheckFailedError("branch points " + out.points[m] + ", " + out.points[k] + " do not match V");
      }
    }
  }
  return out;
}

}  // namespace urysohn
