#include "urysohn/metric_space.hpp"

#include "urysohn/errors.hpp"

#include <algorithm>
#include <set>

namespace urysohn {

FiniteMetricSpace::FiniteMetricSpace(RSet set, std::vector<std::string> points,
                                     std::vector<std::vector<Rational>> dist)
    : set_(std::move(set)), points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (dist.size() != n) throw ParameterError("distance matrix has " + std::to_string(dist.size()) + " rows for " +
                                             std::to_string(n) + " points");
  std::set<std::string> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw ParameterError("duplicate point id '" + p + "'");
  }
  dist_.reserve(n * n);
  for (const auto& row : dist) {
    if (row.size() != n) throw ParameterError("distance matrix is not square");
    for (const auto& v : row) dist_.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0) throw ParameterError("nonzero self distance at '" + points_[i] + "'");
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& v = d(i, j);
      if (v != d(j, i)) throw ParameterError("asymmetric distance between '" + points_[i] + "' and '" + points_[j] + "'");
      if (v <= 0) throw ParameterError("nonpositive distance between '" + points_[i] + "' and '" + points_[j] + "'");
      if (!set_.contains(v)) throw ParameterError("distance " + to_string(v) + " not in " + to_string(set_));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d(i, j) > d(i, k) + d(k, j)) {
          throw ParameterError("triangle inequality fails: d(" + points_[i] + "," + points_[j] + ") > d(" +
                               points_[i] + "," + points_[k] + ") + d(" + points_[k] + "," + points_[j] + ")");
        }
      }
    }
  }
}

std::size_t FiniteMetricSpace::index_of(const std::string& id) const {
  auto it = std::find(points_.begin(), points_.end(), id);
  if (it == points_.end()) throw ParameterError("unknown point '" + id + "'");
  return static_cast<std::size_t>(it - points_.begin());
}

std::vector<std::vector<Rational>> FiniteMetricSpace::matrix() const {
  const std::size_t n = size();
  std::vector<std::vector<Rational>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(dist_.begin() + i * n, dist_.begin() + (i + 1) * n);
  return out;
}

std::vector<Rational> FiniteMetricSpace::distance_values() const {
  std::set<Rational> vals{Rational(0)};
  vals.insert(dist_.begin(), dist_.end());
  return {vals.begin(), vals.end()};
}

FiniteMetricSpace FiniteMetricSpace::restrict(std::span<const std::size_t> indices) const {
  std::vector<std::string> pts;
  std::vector<std::vector<Rational>> m(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    pts.push_back(points_.at(indices[a]));
    for (std::size_t b = 0; b < indices.size(); ++b) m[a].push_back(d(indices[a], indices[b]));
  }
  return FiniteMetricSpace(set_, std::move(pts), std::move(m));
}

bool is_isometric_map(const FiniteMetricSpace& from, const FiniteMetricSpace& to,
                      std::span<const std::size_t> image) {
  if (image.size() != from.size()) return false;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= to.size()) return false;
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (from.d(i, j) != to.d(image[i], image[j])) return false;
    }
  }
  return true;
}

}  // namespace urysohn
