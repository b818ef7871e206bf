#include "urysohn/approximation.hpp"

#include "urysohn/errors.hpp"

#include <algorithm>
#include <set>

namespace urysohn {

namespace {

void require_finite(const RSet& a, const char* what) {
  if (!a.is_finite()) throw ParameterError(std::string(what) + " must be a finite set, got " + to_string(a));
}

void require_subset(const RSet& a, const RSet& r) {
  if (!a.is_subset_of(r)) throw SubsetError(to_string(a) + " is not contained in " + to_string(r));
}

Integer ceil_div(const Rational& num, const Rational& den) {
  const Rational q = num / den;
  Integer n = numerator_of(q), d = denominator_of(q);
  Integer out = n / d;
  if (out * d < n) ++out;
  return out;
}

Integer floor_div(const Rational& num, const Rational& den) {
  const Rational q = num / den;
  return numerator_of(q) / denominator_of(q);
}

}  // namespace

Rational round_up(const RSet& finite_set, const Rational& l) {
  require_finite(finite_set, "round_up domain");
  if (l > finite_set.max()) {
    throw RangeError(to_string(l) + " exceeds max " + to_string(finite_set.max()));
  }
  return *finite_set.inf_above(l);
}

bool is_eps_approximation(const RSet& finite_set, const RSet& set, const Rational& eps) {
  require_finite(finite_set, "approximation");
  require_subset(finite_set, set);
  if (eps <= 0) throw ParameterError("eps must be positive");
  if (finite_set.max() != set.max()) return false;

  const auto& ivs = set.intervals();
  Rational prev = 0;
  for (const auto& a : finite_set.elements()) {
    if (a == 0) continue;
    // R intersected with (prev, a]: its infimum, and whether it is attained.
    auto it = std::upper_bound(ivs.begin(), ivs.end(), prev,
                               [](const Rational& v, const Interval& iv) { return v < iv.hi; });
    // a is in R, so the intersection is nonempty and `it` is valid.
    if (it->lo > prev) {
      if (a - it->lo >= eps) return false;
    } else if (a - prev > eps) {
      return false;
    }
    prev = a;
  }
  return true;
}

ClosureResult subadditive_closure(const RSet& finite_set, const RSet& set) {
  require_finite(finite_set, "closure seed");
  require_subset(finite_set, set);
  if (!set.contains_zero()) throw ParameterError("distance set " + to_string(set) + " must contain 0");

  const auto seed = finite_set.elements();
  const bool has_zero = seed.front() == 0;
  std::vector<Rational> current(seed.begin() + (has_zero ? 1 : 0), seed.end());
  if (current.empty()) throw ParameterError("closure seed needs a positive element");

  ClosureTrace trace;
  const Rational w1 = current.front();
  trace.cap = static_cast<std::size_t>(2 * ceil_div(set.max(), w1) + 2);
  trace.minima.push_back(w1);
  trace.iterates.push_back(finite_set);

  auto as_set = [&](const std::vector<Rational>& pos) {
    std::vector<Rational> all;
    all.reserve(pos.size() + 1);
    if (has_zero) all.push_back(Rational(0));
    all.insert(all.end(), pos.begin(), pos.end());
    return RSet::points(all);
  };

  // Only pairs touching the newest elements can produce anything new.
  std::vector<Rational> fresh = current;
  while (true) {
    std::set<Rational> added;
    for (const auto& a : fresh) {
      for (const auto& b : current) {
        Rational s = *set.sup_below(a + b);
        if (!std::binary_search(current.begin(), current.end(), s)) added.insert(std::move(s));
      }
    }
    if (added.empty()) break;
    if (trace.iterates.size() >= trace.cap) {
      throw NonterminationError("subadditive closure exceeded " + std::to_string(trace.cap) + " iterations");
    }
    fresh.assign(added.begin(), added.end());
    trace.minima.push_back(fresh.front());
    std::vector<Rational> merged;
    merged.reserve(current.size() + fresh.size());
    std::merge(current.begin(), current.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    current = std::move(merged);
    trace.iterates.push_back(as_set(current));
  }
  trace.fixpoint_index = trace.iterates.size() - 1;
  RSet closed = trace.iterates.back();
  return {std::move(closed), std::move(trace)};
}

bool is_subadditive_closed(const RSet& finite_set, const RSet& set) {
  require_finite(finite_set, "closure candidate");
  const auto pts = finite_set.elements();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!finite_set.contains(oplus(set, pts[i], pts[j]))) return false;
    }
  }
  return true;
}

RSet make_eps_approximation(const RSet& set, const Rational& eps, std::span<const Rational> base,
                            const std::optional<Rational>& min_positive) {
  if (eps <= 0) throw ParameterError("eps must be positive, got " + to_string(eps));
  if (!set.contains_zero()) throw ParameterError("distance set " + to_string(set) + " must contain 0");
  for (const auto& b : base) {
    if (!set.contains(b)) throw ParameterError("base element " + to_string(b) + " is not in " + to_string(set));
  }
  const Rational floor_value = min_positive ? *min_positive : Rational(0);
  if (min_positive) {
    const auto& r = *min_positive;
    if (!set.contains(r) || r <= 0 || r >= eps) {
      throw ParameterError("minimum " + to_string(r) + " must be a member of R with 0 < r < eps");
    }
    for (const auto& b : base) {
      if (b > 0 && b < r) {
        throw ParameterError("base element " + to_string(b) + " lies below the requested minimum " + to_string(r));
      }
    }
  }

  std::vector<Rational> seed{Rational(0), set.max()};
  if (min_positive) seed.push_back(*min_positive);
  seed.insert(seed.end(), base.begin(), base.end());
  for (const auto& iv : set.intervals()) {
    if (iv.hi < floor_value) continue;
    const Rational lo = iv.lo < floor_value ? floor_value : iv.lo;
    seed.push_back(lo);
    seed.push_back(iv.hi);
    const Rational len = iv.hi - lo;
    if (len == 0) continue;
    // Spacing len / k: <= r with a prescribed minimum, otherwise < eps.
    const Integer k = min_positive ? ceil_div(len, *min_positive) : floor_div(len, eps) + 1;
    for (Integer j = 1; j < k; ++j) seed.push_back(lo + len * Rational(j) / Rational(k));
  }
  return subadditive_closure(RSet::points(seed), set).closed;
}

}  // namespace urysohn
