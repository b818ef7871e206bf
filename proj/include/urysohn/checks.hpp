#pragma once

#include "urysohn/check_report.hpp"
#include "urysohn/distance_set.hpp"

#include <cstddef>
#include <cstdint>

namespace urysohn {

struct AssociativityOptions {
  /// Extended candidates (endpoints plus one round of pairwise oplus) are
  /// checked exhaustively only when the number of unordered triples stays
  /// below this cap. Endpoint triples are always checked.
  std::size_t candidate_triple_cap = 5'000'000;
  /// Random sample points are drawn from the grid lo + k (hi - lo) / grid.
  std::uint32_t sample_grid = 64;
};

/// Associativity of oplus on R.
///
/// Finite R: every triple is examined and the verdict is PassedExhaustive or
/// Failed. Interval unions: all triples of interval endpoints, then all
/// triples of the extended candidate set (if under the cap), then
/// `sample_budget` seeded random triples; the verdict is PassedHeuristic or
/// Failed. The witness is (a, b, c) with lhs = (a (+) b) (+) c and
/// rhs = a (+) (b (+) c).
///
/// Triples are scanned as multisets x >= y >= z with x, then y, then z
/// increasing, so the reported witness is the first failing multiset in that
/// order. Commutativity reduces each multiset to three groupings.
CheckReport check_associativity(const RSet& set, std::size_t sample_budget, std::uint64_t seed,
                                const AssociativityOptions& options = {});

/// The 4-values condition.
///
/// Finite R: exhaustive over all quadruples (a, b, c, d) with
/// max{b, c, d} <= a <= b + c + d and all x in R; a failure carries
/// (a, b, c, d, x) such that (a, b, x) and (c, d, x) are metric but no y in R
/// makes (a, d, y) and (c, b, y) metric. Interval unions: the condition is
/// equivalent to associativity for closed sets, so this delegates to
/// check_associativity and relabels the method.
CheckReport check_4values(const RSet& set, std::size_t sample_budget, std::uint64_t seed,
                          const AssociativityOptions& options = {});

/// Exhaustive 4-values scan on a finite set; throws ParameterError otherwise.
CheckReport check_4values_exhaustive(const RSet& finite_set);

/// Throws ParameterError unless R contains 0 and passes check_associativity
/// with no random samples. Used by the graph algorithms, which rely on the
/// fold being independent of grouping.
void require_associative(const RSet& set);

}  // namespace urysohn
