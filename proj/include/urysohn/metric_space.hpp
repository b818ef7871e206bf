#pragma once

#include "urysohn/distance_set.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace urysohn {

/// A finite metric space with distances in a distance set R.
class FiniteMetricSpace {
 public:
  /// `dist` is a square matrix indexed like `points`. Throws ParameterError
  /// unless it is symmetric with zero diagonal and positive off-diagonal
  /// entries, satisfies the triangle inequality, every entry lies in R, and
  /// point ids are distinct.
  FiniteMetricSpace(RSet set, std::vector<std::string> points, std::vector<std::vector<Rational>> dist);

  const RSet& set() const { return set_; }
  const std::vector<std::string>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Throws ParameterError for an unknown id.
  std::size_t index_of(const std::string& id) const;
  const Rational& d(std::size_t i, std::size_t j) const { return dist_[i * points_.size() + j]; }
  const Rational& d(const std::string& a, const std::string& b) const { return d(index_of(a), index_of(b)); }

  std::vector<std::vector<Rational>> matrix() const;
  /// dist(M): the realized distances, including 0, increasing.
  std::vector<Rational> distance_values() const;

  /// Subspace on the given indices, in the given order.
  FiniteMetricSpace restrict(std::span<const std::size_t> indices) const;

  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

 private:
  RSet set_;
  std::vector<std::string> points_;
  std::vector<Rational> dist_;
};

/// Whether i -> image[i] preserves distances from `from` into `to`.
bool is_isometric_map(const FiniteMetricSpace& from, const FiniteMetricSpace& to,
                      std::span<const std::size_t> image);

}  // namespace urysohn
