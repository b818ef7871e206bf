#include "urysohn/checks.hpp"

#include "urysohn/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <random>
#include <stdexcept>

namespace urysohn {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::PassedExhaustive: return "PassedExhaustive";
    case Verdict::PassedHeuristic: return "PassedHeuristic";
    case Verdict::Failed: return "Failed";
  }
  return "?";
}

const Rational& CheckReport::witness_value(const std::string& name) const {
  for (const auto& [key, value] : witness) {
    if (key == name) return value;
  }
  throw std::out_of_range("no witness value named " + name);
}

namespace {

// Truncated addition over a sorted interval list, generic in the number
// type so that sets with a modest common denominator can run on int64.
template <class Num>
class OplusKernel {
 public:
  OplusKernel(std::vector<Num> lo, std::vector<Num> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  Num sup_below(const Num& x) const {
    auto it = std::upper_bound(lo_.begin(), lo_.end(), x);
    const auto& hi = hi_[static_cast<std::size_t>(it - lo_.begin()) - 1];
    return hi < x ? hi : x;
  }
  Num op(const Num& a, const Num& b) const { return sup_below(a + b); }

  std::size_t size() const { return lo_.size(); }
  const Num& lo(std::size_t i) const { return lo_[i]; }
  const Num& hi(std::size_t i) const { return hi_[i]; }

 private:
  std::vector<Num> lo_;
  std::vector<Num> hi_;
};

struct TripleFailure {
  Rational a, b, c, lhs, rhs;
};

// Evaluates the multiset {x >= y >= z}; returns an ordered failing triple if
// the three groupings disagree.
template <class Num, class ToRational>
std::optional<TripleFailure> examine(const OplusKernel<Num>& k, const Num& x, const Num& y, const Num& z,
                                     const ToRational& to_rat) {
  const Num s = k.op(k.op(x, y), z);
  const Num p = k.op(k.op(y, z), x);
  if (s != p) return TripleFailure{to_rat(x), to_rat(y), to_rat(z), to_rat(s), to_rat(p)};
  const Num q = k.op(k.op(x, z), y);
  if (s != q) return TripleFailure{to_rat(y), to_rat(x), to_rat(z), to_rat(s), to_rat(q)};
  return std::nullopt;
}

template <class Num, class ToRational>
std::optional<TripleFailure> scan_triples(const OplusKernel<Num>& k, const std::vector<Num>& cand,
                                          const ToRational& to_rat) {
  const std::size_t n = cand.size();
  std::vector<Num> pair(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) pair[i * n + j] = pair[j * n + i] = k.op(cand[i], cand[j]);
  }
  for (std::size_t xi = 0; xi < n; ++xi) {
    for (std::size_t yi = 0; yi <= xi; ++yi) {
      const Num& xy = pair[xi * n + yi];
      for (std::size_t zi = 0; zi <= yi; ++zi) {
        const Num s = k.op(xy, cand[zi]);
        const Num p = k.op(pair[yi * n + zi], cand[xi]);
        const Num q = k.op(pair[xi * n + zi], cand[yi]);
        if (s != p || s != q) return examine(k, cand[xi], cand[yi], cand[zi], to_rat);
      }
    }
  }
  return std::nullopt;
}

std::size_t multiset_triples(std::size_t n) {
  // n (n + 1) (n + 2) / 6 with saturation.
  const long double t = static_cast<long double>(n) * (n + 1) * (n + 2) / 6;
  return t > static_cast<long double>(std::numeric_limits<std::size_t>::max())
             ? std::numeric_limits<std::size_t>::max()
             : static_cast<std::size_t>(t);
}

template <class Num>
std::vector<Num> sorted_unique(std::vector<Num> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

CheckReport failure_report(const TripleFailure& f, std::string method) {
  CheckReport r;
  r.verdict = Verdict::Failed;
  r.witness = {{"a", f.a}, {"b", f.b}, {"c", f.c}};
  r.lhs = f.lhs;
  r.rhs = f.rhs;
  r.method = std::move(method);
  return r;
}

template <class Num, class ToRational, class FromGrid>
CheckReport run_associativity(const OplusKernel<Num>& k, bool finite, std::size_t sample_budget,
                              std::uint64_t seed, const AssociativityOptions& opt, const ToRational& to_rat,
                              const FromGrid& grid_point) {
  std::vector<Num> endpoints;
  for (std::size_t i = 0; i < k.size(); ++i) {
    endpoints.push_back(k.lo(i));
    endpoints.push_back(k.hi(i));
  }
  endpoints = sorted_unique(std::move(endpoints));

  if (auto f = scan_triples(k, endpoints, to_rat)) {
    return failure_report(*f, finite ? "exhaustive" : "endpoint-triples");
  }
  if (finite) {
    CheckReport r;
    r.method = "exhaustive";
    return r;
  }

  CheckReport r;
  r.method = "endpoint-triples";
  std::vector<Num> extended = endpoints;
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) extended.push_back(k.op(endpoints[i], endpoints[j]));
  }
  extended = sorted_unique(std::move(extended));
  if (extended.size() > endpoints.size()) {
    if (multiset_triples(extended.size()) <= opt.candidate_triple_cap) {
      if (auto f = scan_triples(k, extended, to_rat)) return failure_report(*f, "candidate-triples");
      r.method = "candidate-triples";
    } else {
      r.notes.push_back("extended candidate set of " + std::to_string(extended.size()) +
                        " values exceeds the triple cap; only endpoint triples were checked exhaustively");
    }
  } else {
    r.method = "candidate-triples";
  }

  std::mt19937_64 rng(seed);
  const std::uint64_t grid = opt.sample_grid;
  for (std::size_t s = 0; s < sample_budget; ++s) {
    std::array<Num, 3> t;
    for (auto& v : t) {
      const std::size_t iv = static_cast<std::size_t>(rng() % k.size());
      const std::uint64_t step = rng() % (grid + 1);
      v = grid_point(iv, step);
    }
    std::sort(t.begin(), t.end(), [](const Num& a, const Num& b) { return b < a; });
    if (auto f = examine(k, t[0], t[1], t[2], to_rat)) {
      auto report = failure_report(*f, r.method + "+sampling");
      report.sample_count = s + 1;
      return report;
    }
  }
  r.verdict = Verdict::PassedHeuristic;
  r.sample_count = sample_budget;
  if (sample_budget > 0) r.method += "+sampling";
  return r;
}

// Common scale for an int64 representation of the set, or nullopt when the
// scaled values would not leave headroom for sums of three members.
std::optional<Integer> integer_scale(const RSet& set, std::uint32_t grid) {
  Integer scale = 1;
  for (const auto& iv : set.intervals()) {
    scale = boost::multiprecision::lcm(scale, denominator_of(iv.lo));
    scale = boost::multiprecision::lcm(scale, denominator_of(iv.hi));
  }
  scale *= grid;
  const Integer limit = Integer(1) << 60;
  Integer top = numerator_of(set.max() * Rational(scale));
  if (scale > limit || 4 * top > limit) return std::nullopt;
  return scale;
}

}  // namespace

CheckReport check_associativity(const RSet& set, std::size_t sample_budget, std::uint64_t seed,
                                const AssociativityOptions& options) {
  if (!set.contains_zero()) throw ParameterError("associativity check needs 0 in the distance set");
  if (options.sample_grid == 0) throw ParameterError("sample grid must be positive");
  const bool finite = set.is_finite();
  const std::uint32_t grid = finite ? 1 : options.sample_grid;

  if (auto scale = integer_scale(set, grid)) {
    std::vector<std::int64_t> lo, hi;
    for (const auto& iv : set.intervals()) {
      lo.push_back(numerator_of(iv.lo * Rational(*scale)).convert_to<std::int64_t>());
      hi.push_back(numerator_of(iv.hi * Rational(*scale)).convert_to<std::int64_t>());
    }
    OplusKernel<std::int64_t> k(std::move(lo), std::move(hi));
    const Integer sc = *scale;
    auto to_rat = [&](std::int64_t v) { return Rational(Integer(v), sc); };
    auto grid_point = [&](std::size_t iv, std::uint64_t step) {
      const std::int64_t width = k.hi(iv) - k.lo(iv);
      return k.lo(iv) + width / static_cast<std::int64_t>(grid) * static_cast<std::int64_t>(step);
    };
    return run_associativity(k, finite, sample_budget, seed, options, to_rat, grid_point);
  }

  std::vector<Rational> lo, hi;
  for (const auto& iv : set.intervals()) {
    lo.push_back(iv.lo);
    hi.push_back(iv.hi);
  }
  OplusKernel<Rational> k(std::move(lo), std::move(hi));
  auto to_rat = [](const Rational& v) { return v; };
  auto grid_point = [&](std::size_t iv, std::uint64_t step) {
    return k.lo(iv) + (k.hi(iv) - k.lo(iv)) * Rational(step) / Rational(grid);
  };
  return run_associativity(k, finite, sample_budget, seed, options, to_rat, grid_point);
}

CheckReport check_4values_exhaustive(const RSet& finite_set) {
  if (!finite_set.is_finite()) throw ParameterError("exhaustive 4-values scan needs a finite set");
  const auto pts = finite_set.elements();
  const std::size_t n = pts.size();
  const std::size_t words = (n + 63) / 64;

  // metric[(i * n + j) * words ...] = bitset of k with (p_i, p_j, p_k) metric.
  std::vector<std::uint64_t> metric(n * n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto* row = &metric[(i * n + j) * words];
      for (std::size_t k = 0; k < n; ++k) {
        if (is_metric_triple(pts[i], pts[j], pts[k])) row[k / 64] |= std::uint64_t{1} << (k % 64);
      }
    }
  }
  auto common = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> std::optional<std::size_t> {
    const auto* r1 = &metric[(a * n + b) * words];
    const auto* r2 = &metric[(c * n + d) * words];
    for (std::size_t w = 0; w < words; ++w) {
      if (const auto both = r1[w] & r2[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(both));
    }
    return std::nullopt;
  };

  CheckReport r;
  r.method = "exhaustive-4values";
  // Indices follow the increasing order of pts, so b, c, d <= a in value
  // exactly when their indices are <= a.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      for (std::size_t c = 0; c <= a; ++c) {
        for (std::size_t d = 0; d <= a; ++d) {
          if (pts[a] > pts[b] + pts[c] + pts[d]) continue;
          const auto x = common(a, b, c, d);
          if (!x) continue;
          if (common(a, d, c, b)) continue;
          r.verdict = Verdict::Failed;
          r.witness = {{"a", pts[a]}, {"b", pts[b]}, {"c", pts[c]}, {"d", pts[d]}, {"x", pts[*x]}};
          return r;
        }
      }
    }
  }
  return r;
}

CheckReport check_4values(const RSet& set, std::size_t sample_budget, std::uint64_t seed,
                          const AssociativityOptions& options) {
  if (!set.contains_zero()) throw ParameterError("4-values check needs 0 in the distance set");
  if (set.is_finite()) return check_4values_exhaustive(set);
  auto r = check_associativity(set, sample_budget, seed, options);
  r.method = "4values-via-associativity:" + r.method;
  return r;
}

void require_associative(const RSet& set) {
  if (!set.contains_zero()) throw ParameterError("distance set " + to_string(set) + " must contain 0");
  const auto r = check_associativity(set, 0, 0);
  if (r.failed()) {
    throw ParameterError("oplus is not associative on " + to_string(set) + ": (" + to_string(r.witness[0].second) +
                         ", " + to_string(r.witness[1].second) + ", " + to_string(r.witness[2].second) +
                         ") gives " + to_string(*r.lhs) + " vs " + to_string(*r.rhs));
  }
}

}  // namespace urysohn
