#pragma once

#include "urysohn/check_report.hpp"
#include "urysohn/metric_space.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace urysohn {

/// (A)_eps = {x : d(x, y) < eps for some y in A}, as increasing indices.
std::vector<std::size_t> eps_neighborhood(const FiniteMetricSpace& M, std::span<const std::size_t> A,
                                          const Rational& eps);

/// Prescribed distances from a prospective new point to the points of
/// `domain`: |f(x) - f(y)| <= d(x, y) <= f(x) + f(y), values positive.
struct KatetovFunction {
  std::vector<std::size_t> domain;
  std::vector<Rational> values;
};

bool is_katetov(const FiniteMetricSpace& M, const KatetovFunction& f);

/// All Katetov functions on F with values in S \ {0}, values varying
/// fastest in the last domain position. S must be finite.
std::vector<KatetovFunction> enumerate_katetov(const FiniteMetricSpace& M, std::span<const std::size_t> F,
                                               const RSet& S);

/// Index of a point other than F realizing f, if there is one.
std::optional<std::size_t> find_realization(const FiniteMetricSpace& M, const KatetovFunction& f);

enum class ExtensionRule {
  /// The new point gets the prescribed edges only; every other distance is
  /// the graph distance in the completed graph (the largest admissible value).
  Completion,
  /// Starts from the completion row and runs a seeded annealing search over
  /// the distances to the other points for a Katetov row that realizes many
  /// pending functions while leaving few new ones unrealized. The prescribed
  /// distances never change, and the final complete graph is still checked
  /// by completion.
  Annealed,
};

struct SaturationOptions {
  ExtensionRule rule = ExtensionRule::Annealed;
  /// Independent attempts, each seeded from `seed` and the attempt number.
  /// Each attempt starts again from one point and is capped at max_points.
  std::size_t attempts = 12;
  /// Point cap for every attempt but the last, which may use max_points.
  /// 0 means max_points throughout.
  std::size_t attempt_points = 36;
};

struct SaturatedSpace {
  FiniteMetricSpace space;
  /// True when every Katetov function on at most `arity` points is realized.
  bool saturated = false;
  /// Functions still unrealized at the end.
  std::size_t pending = 0;
};

/// Grows a space from one point by repeatedly picking (seeded) an
/// unrealized Katetov function on at most `witness_arity` points and
/// adjoining a point that realizes it. Stops at max_points or saturation.
/// Throws ParameterError for an infinite S or max_points / arity of 0,
/// CheckFailedError if S fails the 4-values condition.
SaturatedSpace build_saturated_space(const RSet& S, std::size_t max_points, std::size_t witness_arity,
                                     std::uint64_t seed, const SaturationOptions& options = {});

/// Every metric space on <= n points with distances in S, one per
/// isometry class, as distance matrices. Throws BudgetError past `budget`
/// candidate matrices.
std::vector<FiniteMetricSpace> enumerate_spaces(const RSet& S, std::size_t n, std::size_t budget);

/// Isometric embedding of `pattern` into M using only the `allowed` points,
/// first in lexicographic order of images.
/// `nodes` counts search nodes; throws BudgetError past `budget`.
std::optional<std::vector<std::size_t>> find_embedding(const FiniteMetricSpace& pattern, const FiniteMetricSpace& M,
                                                       std::span<const std::size_t> allowed, std::size_t budget,
                                                       std::size_t* nodes = nullptr);

/// Every space on <= n points with distances in S embeds into M. A failure
/// lists the distances of a space that does not embed. Throws
/// ParameterError for an infinite S, BudgetError past `budget` nodes.
CheckReport check_universality(const FiniteMetricSpace& M, const RSet& S, std::size_t n,
                               std::size_t budget = 50'000'000);

/// Image of x under some extension of the partial isometry
/// domain[i] -> image[i], if one exists.
std::optional<std::size_t> extend_isometry(const FiniteMetricSpace& M, std::span<const std::size_t> domain,
                                           std::span<const std::size_t> image, std::size_t x);

/// Every isometry between subsets of at most k points extends to every
/// further point. A failure lists the stuck map and point.
CheckReport check_extension_property(const FiniteMetricSpace& M, std::size_t k, std::size_t budget = 50'000'000);

/// Increasing isometric map of u_0 .. u_{m-1} into `target` with m as large
/// as possible, or exactly `prefix` when given. None when not even one
/// point (or the requested prefix) maps.
std::optional<std::vector<std::size_t>> find_order_embedding(const FiniteMetricSpace& U,
                                                             std::span<const std::size_t> target,
                                                             std::size_t budget,
                                                             std::optional<std::size_t> prefix = std::nullopt);

/// f(x) = least distance from x to the other part. Throws PartitionError
/// unless X is a nonempty proper subset.
std::vector<Rational> partition_distance_function(const FiniteMetricSpace& M, std::span<const std::size_t> X);

struct Coloring {
  /// parts[i] is the color of point i.
  std::vector<std::size_t> parts;
  std::size_t colors() const;
};

struct ColoredCopy {
  std::size_t color;
  std::vector<std::size_t> embedding;
};

/// A copy of target inside (class i)_eps, or inside class i itself when
/// eps = 0, trying colors in increasing order. Throws ParameterError if the
/// coloring is not total or dist(target) is not in dist(M).
std::optional<ColoredCopy> indivisibility_search(const FiniteMetricSpace& M, const Coloring& coloring,
                                                 const FiniteMetricSpace& target, const Rational& eps,
                                                 std::size_t budget = 50'000'000);

/// A copy of target on which max f - min f < eps.
std::optional<std::vector<std::size_t>> oscillation_search(const FiniteMetricSpace& M, std::span<const Rational> f,
                                                           const Rational& eps, const FiniteMetricSpace& target,
                                                           std::size_t budget = 50'000'000);

struct RoundedSpace {
  /// Same points, each distance replaced by its round-up in S.
  FiniteMetricSpace space;
  /// Pairs (i < j) whose distance already lay in S.
  std::vector<std::pair<std::size_t, std::size_t>> exact_pairs;
  Rational max_distortion;
};

/// Rounds every distance of V up into the finite set S. Throws
/// CheckFailedError if the rounded distances are not a metric.
RoundedSpace round_up_space(const FiniteMetricSpace& V, const RSet& S);

}  // namespace urysohn
