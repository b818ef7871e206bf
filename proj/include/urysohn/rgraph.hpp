#pragma once

#include "urysohn/check_report.hpp"
#include "urysohn/distance_set.hpp"
#include "urysohn/metric_space.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace urysohn {

struct Edge {
  std::size_t u;
  std::size_t v;
  Rational weight;
};

/// Simple undirected graph with positive edge weights drawn from R.
///
/// Walk weights fold edge weights with oplus, which only makes sense when
/// oplus is associative on R, so the constructor rejects ground sets that
/// fail the associativity check.
class RGraph {
 public:
  /// Throws ParameterError if R fails require_associative or ids repeat.
  RGraph(RSet set, std::vector<std::string> vertices);

  /// Throws ParameterError for loops, nonpositive weights or weights outside
  /// R, EdgeExistsError if {u, v} is already an edge.
  void add_edge(std::size_t u, std::size_t v, const Rational& weight);
  void add_edge(const std::string& u, const std::string& v, const Rational& weight);
  /// Appends an isolated vertex and returns its index.
  std::size_t add_vertex(std::string id);

  const RSet& set() const { return set_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// (neighbor, index into edges()) pairs.
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbors(std::size_t v) const { return adj_[v]; }

  std::size_t index_of(const std::string& id) const;
  bool has_edge(std::size_t u, std::size_t v) const;
  std::optional<Rational> weight(std::size_t u, std::size_t v) const;

 private:
  static std::uint64_t key(std::size_t u, std::size_t v);

  RSet set_;
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

/// Fold of the edge weights along the walk; 0 for a single vertex.
/// Throws NotAWalkError if the walk is empty or a step is not an edge.
Rational walk_weight(const RGraph& graph, std::span<const std::size_t> walk);

struct PathResult {
  Rational value;
  /// Vertices of a minimizing trail from source to target.
  std::vector<std::size_t> trail;
};

/// d(a, b), the least walk weight from a to b, by label setting. Appending an
/// edge never decreases a fold and oplus is monotone in each argument, so
/// settled labels are final. Throws DisconnectedError if no walk exists.
PathResult distance(const RGraph& graph, std::size_t a, std::size_t b);

/// d(source, v) for every v; unreachable vertices get nullopt.
std::vector<std::optional<Rational>> distances_from(const RGraph& graph, std::size_t source);

/// Passes iff d(u, v) equals the weight of every edge {u, v}. On failure
/// witness_points is a lighter trail from u to v, so the offending edge is
/// its first and last vertex; lhs is the edge weight, rhs the trail weight.
CheckReport is_metric(const RGraph& graph);

/// Finite graphs with positive weights are always regular.
bool is_regular(const RGraph& graph);

struct CycleWitness {
  /// Vertices of an induced cycle, in order.
  std::vector<std::size_t> cycle;
  /// Position i of the violated edge {cycle[i], cycle[i+1 mod k]}.
  std::size_t edge_position = 0;
  /// Its weight, and the fold of the remaining cycle edges.
  Rational edge_weight;
  Rational rest_weight;
};

struct CycleSearch {
  std::optional<CycleWitness> witness;
  /// False when cycles longer than max_len could exist and were not examined.
  bool complete = true;
};

/// Searches induced cycles of length <= max_len for an edge heavier than the
/// fold of the other cycle edges.
CycleSearch find_nonmetric_cycle(const RGraph& graph, std::size_t max_len);

/// Joins the components by an r-clique on their lowest-index vertices.
/// Throws ParameterError unless r is a positive member of R.
RGraph connect(const RGraph& graph, const Rational& r);

/// Adds the edge {a, b} with weight d(a, b). Throws EdgeExistsError if it
/// is already an edge, ParameterError if a = b, DisconnectedError if no walk.
RGraph add_shortcut(const RGraph& graph, std::size_t a, std::size_t b);

/// All-pairs d, one label-setting pass per source.
std::vector<std::vector<Rational>> all_pairs_distances(const RGraph& graph);

/// The metric space (G, d). Throws NotMetricError if the graph is not
/// metric, DisconnectedError if it is not connected, CompletionError if the
/// result violates the metric space invariants.
FiniteMetricSpace complete_to_metric_space(const RGraph& graph);

/// The complete graph of a metric space.
RGraph as_graph(const FiniteMetricSpace& space);

}  // namespace urysohn
