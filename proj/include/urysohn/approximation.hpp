#pragma once

#include "urysohn/distance_set.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace urysohn {

/// The least element of the finite set A that is >= l.
/// Throws RangeError if l > max(A), ParameterError if A is not finite.
Rational round_up(const RSet& finite_set, const Rational& l);

/// Whether the finite set A is an eps-approximation of R: max A = max R, and
/// round_up(A, l) - l < eps for every nonzero l in R. Checked exactly per
/// gap between consecutive elements of A: when R accumulates at the lower
/// end of a gap the supremum of round_up(l) - l is not attained and a gap of
/// exactly eps is still admissible.
/// Throws SubsetError if A is not contained in R.
bool is_eps_approximation(const RSet& finite_set, const RSet& set, const Rational& eps);

/// Iterates C_1(A) = A, C_{n+1}(A) = C(C_n(A)) with
/// C(S) = {a (+) b : a, b in S} u S.
struct ClosureTrace {
  /// C_1(A), C_2(A), ..., ending with the first closed iterate.
  std::vector<RSet> iterates;
  /// w_1 = min positive element of A, then w_{n+1} = min(C_{n+1} \ C_n).
  std::vector<Rational> minima;
  /// Index into `iterates` of the closed set.
  std::size_t fixpoint_index = 0;
  /// Iteration cap that was enforced, 2 ceil(max R / w_1) + 2.
  std::size_t cap = 0;
};

struct ClosureResult {
  RSet closed;
  ClosureTrace trace;
};

/// Subadditive closure of the finite set A inside R, with oplus taken in R.
/// Throws SubsetError if A is not in R, ParameterError if A has no positive
/// element or R lacks 0, and NonterminationError if the iteration cap is hit.
ClosureResult subadditive_closure(const RSet& finite_set, const RSet& set);

/// True when C(A) = A.
bool is_subadditive_closed(const RSet& finite_set, const RSet& set);

/// A finite subadditive closed eps-approximation S of R containing `base`.
///
/// Seeds every interval endpoint and isolated point of R, the members of
/// `base`, max R and 0, plus evenly spaced interior points of each
/// nondegenerate interval, then closes under oplus. Without `min_positive`
/// the spacing is strictly below eps. With `min_positive` = r (requires
/// r in R, 0 < r < eps) the grid is an r-approximation with spacing <= r,
/// no positive point below r is seeded, and r is the minimum positive
/// element of the result.
RSet make_eps_approximation(const RSet& set, const Rational& eps, std::span<const Rational> base,
                            const std::optional<Rational>& min_positive = std::nullopt);

}  // namespace urysohn
