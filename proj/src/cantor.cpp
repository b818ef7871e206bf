#include "urysohn/cantor.hpp"

#include "urysohn/errors.hpp"

namespace urysohn {

namespace {

void require_args(const Rational& a, const Rational& w, const Rational& b) {
  if (!(a < b)) throw ParameterError("need a < b, got " + to_string(a) + ", " + to_string(b));
  if (w < 0 || w > 1) throw ParameterError("weight " + to_string(w) + " outside [0,1]");
}

void split(const std::vector<Rational>& ws, std::size_t level, const Rational& a, const Rational& b,
           std::vector<Interval>& out) {
  if (level == ws.size()) {
    out.push_back({a, b});
    return;
  }
  const auto& w = ws[level];
  split(ws, level + 1, a, gamma(a, w, b), out);
  split(ws, level + 1, delta(a, w, b), b, out);
}

}  // namespace

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (w <= 0 || w >= 1) throw ParameterError("weight " + to_string(w) + " outside (0,1)");
  }
}

Rational gamma(const Rational& a, const Rational& w, const Rational& b) {
  require_args(a, w, b);
  return ((1 + w) * a + (1 - w) * b) / 2;
}

Rational delta(const Rational& a, const Rational& w, const Rational& b) {
  require_args(a, w, b);
  return ((1 - w) * a + (1 + w) * b) / 2;
}

RSet remove_middle(const Rational& a, const Rational& w, const Rational& b) {
  return RSet({{a, gamma(a, w, b)}, {delta(a, w, b), b}});
}

RSet cantor_set(const WeightVector& weights) { return cantor_set(weights, Rational(0), Rational(1)); }

RSet cantor_set(const WeightVector& weights, const Rational& a, const Rational& b) {
  if (!(a < b)) throw ParameterError("need a < b, got " + to_string(a) + ", " + to_string(b));
  std::vector<Interval> out;
  out.reserve(std::size_t{1} << std::min<std::size_t>(weights.size(), 20));
  split(weights.weights(), 0, a, b, out);
  return RSet(std::move(out));
}

}  // namespace urysohn
