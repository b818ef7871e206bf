#pragma once

#include "urysohn/metric_space.hpp"
#include "urysohn/rgraph.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace urysohn {

/// Two disjoint spaces U = (u_i; i < N) and V = (v_i; i in I) whose
/// distances differ by at most r on matching index pairs.
struct BridgeInput {
  RSet set;
  FiniteMetricSpace U;
  FiniteMetricSpace V;
  /// I[k] is the index of V's k-th point; distinct, each < |U|.
  std::vector<std::size_t> I;
  Rational r;
};

/// Throws ParameterError for malformed input (shared point ids, bad I,
/// r not a positive member of R, distances outside R) and HypothesisError
/// if |dU(u_i, u_j) - dV(v_i, v_j)| > r for some i, j in I.
void validate(const BridgeInput& in);

/// U and V as cliques plus the bridge edges {u_i, v_i} of weight r.
/// Vertices are U's points followed by V's.
RGraph build_bridge_graph(const BridgeInput& in);

/// W on points w0 .. w{N-1}: the completed bridge graph read through
/// w_i -> v_i for i in I and w_i -> u_i otherwise.
FiniteMetricSpace derive_companion_W(const BridgeInput& in);

/// An order preserving injection alpha : {0..level} -> {0..N-1} such that
/// u_i -> u_alpha(i) is an isometry.
struct TreeNode {
  std::vector<std::size_t> map;
  std::size_t level() const { return map.size() - 1; }
  /// Index of the anchor u_alpha(level) in U.
  std::size_t anchor() const { return map.back(); }
  /// Display id, e.g. "P[0,2]".
  std::string id() const;
};

struct TreeOptions {
  std::size_t node_cap = 20000;
};

struct Tree {
  std::size_t depth = 0;
  /// Depth-first order; a node's parent precedes it.
  std::vector<TreeNode> nodes;
  /// Comparable pairs alpha below beta, weighted dW(w_level(alpha), w_level(beta)).
  RGraph graph;
  /// Number of maximal nodes per level, i.e. maximal branches by length - 1.
  std::map<std::size_t, std::size_t> maximal_by_level;
};

/// All nodes of level < depth. Levels >= |U| are empty.
/// Throws BudgetError if the node count exceeds options.node_cap.
Tree build_tree(const BridgeInput& in, const FiniteMetricSpace& W, std::size_t depth,
                const TreeOptions& options = {});

struct Construction {
  FiniteMetricSpace W;
  Tree tree;
  /// U's points followed by the tree nodes.
  RGraph H;
  /// Completion of H.
  FiniteMetricSpace L;
  /// Comparable tree pairs on which |dH(a, b) - dU(u<a>, u<b>)| <= r was checked.
  std::size_t comparable_pairs_checked = 0;
};

/// H = tree graph + U + anchor edges {alpha, u_alpha(level)} of weight r,
/// and L its completion. Throws MetricityError if H is not metric or the
/// anchor inequality fails on a comparable pair.
Construction build_H_and_L(const BridgeInput& in, std::size_t depth, const TreeOptions& options = {});

struct NearbyCopy {
  /// Branch nodes alpha_i for i in I with i < min(depth, |embedding|), as L ids.
  std::vector<std::string> points;
  /// The I indices they stand for.
  std::vector<std::size_t> indices;
  /// Their anchors u_embedding(i), as L ids, and dL(point, anchor).
  std::vector<std::string> anchors;
  std::vector<Rational> anchor_distances;
};

/// Follows the branch of `embedding` (an order preserving isometric map of
/// an initial segment of U into U) and returns its nodes standing for V.
/// Every returned point is checked to lie within r of its anchor and the
/// returned points are checked to be an isometric copy of the matching
/// part of V. Throws NotAnEmbeddingError if the map is not increasing,
/// out of range or not isometric.
NearbyCopy find_nearby_copy(const FiniteMetricSpace& L, const std::vector<std::size_t>& embedding,
                            const BridgeInput& in, std::size_t depth);

}  // namespace urysohn
