#pragma once

#include "urysohn/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace urysohn {

struct Interval {
  Rational lo;
  Rational hi;

  bool degenerate() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A closed bounded subset of the non-negative rationals, stored as a sorted
/// list of pairwise disjoint closed intervals separated by positive gaps.
/// Points are degenerate intervals. Construction merges overlapping and
/// touching intervals, so two equal sets always have equal representations.
class RSet {
 public:
  /// Throws ParameterError if the list is empty, an interval has lo > hi, or
  /// an endpoint is negative.
  explicit RSet(std::vector<Interval> intervals);

  static RSet points(std::span<const Rational> values);
  static RSet points(std::initializer_list<Rational> values);
  static RSet interval(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t interval_count() const { return intervals_.size(); }

  bool contains(const Rational& x) const;
  bool contains_zero() const { return intervals_.front().lo == 0; }
  /// True when every interval is a single point.
  bool is_finite() const;
  /// Members of a finite set in increasing order. Throws ParameterError
  /// when the set is not finite.
  std::vector<Rational> elements() const;
  /// All interval endpoints, increasing, without repetition.
  std::vector<Rational> endpoints() const;

  const Rational& min() const { return intervals_.front().lo; }
  const Rational& max() const { return intervals_.back().hi; }

  /// Smallest positive member, if one exists. For a set containing an
  /// interval [0, h] with h > 0 there is none (0 is a limit point).
  std::optional<Rational> min_positive() const;

  /// Largest member that is <= x, if any member is <= x.
  std::optional<Rational> sup_below(const Rational& x) const;
  /// Smallest member that is >= x, if any member is >= x.
  std::optional<Rational> inf_above(const Rational& x) const;

  bool is_subset_of(const RSet& other) const;

  friend bool operator==(const RSet&, const RSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

std::string to_string(const RSet& set);

// ---------------------------------------------------------------------------
// Truncated addition and its direct consequences.

/// Containment test. Negative x is never contained.
bool contains(const RSet& set, const Rational& x);

/// a (+) b: the largest member of R that is <= a + b.
/// Throws MembershipError if a or b is not in R, ParameterError if 0 is not.
Rational oplus(const RSet& set, const Rational& a, const Rational& b);

/// Left fold of oplus. Grouping only stops mattering when R is associative;
/// this function does not check that.
Rational oplus_fold(const RSet& set, std::span<const Rational> values);

/// a <= b + c, b <= a + c, c <= a + b.
bool is_metric_triple(const Rational& a, const Rational& b, const Rational& c);
/// Same, after checking membership of all three values in R.
bool is_metric_triple(const RSet& set, const Rational& a, const Rational& b, const Rational& c);

// ---------------------------------------------------------------------------
// Set transformations that preserve the 4-values condition.

/// {c * x : x in R} for c > 0.
RSet scale(const RSet& set, const Rational& factor);
/// {x in R : x <= c} for c >= 0. Throws ParameterError if empty.
RSet truncate(const RSet& set, const Rational& bound);

struct TranslatedUnion {
  RSet set;
  Rational period;
  std::size_t copies;
  /// Sums above max(set) saturate at max(set) instead of reaching the next
  /// (absent) copy, so oplus differs there from the infinite union.
  std::string note;
};

/// Union of the translates R + n*l for 0 <= n < copies. Requires
/// l > 2 max(R) and copies >= 1.
TranslatedUnion translate_union(const RSet& set, const Rational& period, std::size_t copies);

}  // namespace urysohn
