#pragma once

#include "urysohn/distance_set.hpp"

#include <span>
#include <vector>

namespace urysohn {

/// Relative widths of the removed middle intervals, outermost first.
/// Every entry lies strictly between 0 and 1.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws ParameterError if some entry is outside (0, 1).
  explicit WeightVector(std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<Rational> weights_;
};

/// (1/2)((1 + w) a + (1 - w) b). Requires a < b and 0 <= w <= 1.
Rational gamma(const Rational& a, const Rational& w, const Rational& b);
/// (1/2)((1 - w) a + (1 + w) b). Requires a < b and 0 <= w <= 1.
Rational delta(const Rational& a, const Rational& w, const Rational& b);

/// [a, gamma(a, w, b)] u [delta(a, w, b), b]. For w = 1 this is {a, b}.
RSet remove_middle(const Rational& a, const Rational& w, const Rational& b);

/// [0(w)1] at depth |w|: 2^|w| intervals.
RSet cantor_set(const WeightVector& weights);
/// [a(w)b], the same construction on [a, b].
RSet cantor_set(const WeightVector& weights, const Rational& a, const Rational& b);

}  // namespace urysohn
