#include "urysohn/distance_set.hpp"

#include "urysohn/errors.hpp"

#include <algorithm>

namespace urysohn {

RSet::RSet(std::vector<Interval> intervals) {
  if (intervals.empty()) throw ParameterError("distance set must be nonempty");
  for (const auto& iv : intervals) {
    if (iv.lo > iv.hi) {
      throw ParameterError("interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "] has lo > hi");
    }
    if (iv.lo < 0) throw ParameterError("negative endpoint " + to_string(iv.lo));
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  intervals_.reserve(intervals.size());
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      if (iv.hi > intervals_.back().hi) intervals_.back().hi = iv.hi;
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

RSet RSet::points(std::span<const Rational> values) {
  std::vector<Interval> ivs;
  ivs.reserve(values.size());
  for (const auto& v : values) ivs.push_back({v, v});
  return RSet(std::move(ivs));
}

RSet RSet::points(std::initializer_list<Rational> values) {
  return points(std::span<const Rational>(values.begin(), values.size()));
}

RSet RSet::interval(const Rational& lo, const Rational& hi) { return RSet({{lo, hi}}); }

bool RSet::contains(const Rational& x) const {
  // First interval whose hi >= x; x is inside iff its lo <= x.
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Interval& iv, const Rational& v) { return iv.hi < v; });
  return it != intervals_.end() && it->lo <= x;
}

bool RSet::is_finite() const {
  return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval& iv) { return iv.degenerate(); });
}

std::vector<Rational> RSet::elements() const {
  if (!is_finite()) throw ParameterError("set " + urysohn::to_string(*this) + " is not finite");
  std::vector<Rational> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back(iv.lo);
  return out;
}

std::vector<Rational> RSet::endpoints() const {
  std::vector<Rational> out;
  out.reserve(2 * intervals_.size());
  for (const auto& iv : intervals_) {
    out.push_back(iv.lo);
    if (!iv.degenerate()) out.push_back(iv.hi);
  }
  return out;
}

std::optional<Rational> RSet::min_positive() const {
  const auto& first = intervals_.front();
  if (first.lo > 0) return first.lo;
  if (!first.degenerate()) return std::nullopt;
  if (intervals_.size() < 2) return std::nullopt;
  return intervals_[1].lo;
}

std::optional<Rational> RSet::sup_below(const Rational& x) const {
  // Last interval with lo <= x.
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return std::nullopt;
  --it;
  return it->hi < x ? it->hi : x;
}

std::optional<Rational> RSet::inf_above(const Rational& x) const {
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Interval& iv, const Rational& v) { return iv.hi < v; });
  if (it == intervals_.end()) return std::nullopt;
  return it->lo > x ? it->lo : x;
}

bool RSet::is_subset_of(const RSet& other) const {
  for (const auto& iv : intervals_) {
    auto it = std::lower_bound(other.intervals_.begin(), other.intervals_.end(), iv.lo,
                               [](const Interval& o, const Rational& v) { return o.hi < v; });
    if (it == other.intervals_.end() || it->lo > iv.lo || it->hi < iv.hi) return false;
  }
  return true;
}

std::string to_string(const RSet& set) {
  std::string out;
  for (const auto& iv : set.intervals()) {
    if (!out.empty()) out += " u ";
    if (iv.degenerate()) {
      out += "{" + to_string(iv.lo) + "}";
    } else {
      out += "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
    }
  }
  return out;
}

bool contains(const RSet& set, const Rational& x) { return set.contains(x); }

namespace {

void require_member(const RSet& set, const Rational& x) {
  if (!set.contains(x)) throw MembershipError(to_string(x) + " is not in " + to_string(set));
}

}  // namespace

Rational oplus(const RSet& set, const Rational& a, const Rational& b) {
  if (!set.contains_zero()) throw ParameterError("oplus needs 0 in the distance set");
  require_member(set, a);
  require_member(set, b);
  return *set.sup_below(a + b);
}

Rational oplus_fold(const RSet& set, std::span<const Rational> values) {
  if (values.empty()) throw ParameterError("oplus_fold needs a nonempty sequence");
  require_member(set, values.front());
  Rational acc = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) acc = oplus(set, acc, values[i]);
  return acc;
}

bool is_metric_triple(const Rational& a, const Rational& b, const Rational& c) {
  return a <= b + c && b <= a + c && c <= a + b;
}

bool is_metric_triple(const RSet& set, const Rational& a, const Rational& b, const Rational& c) {
  require_member(set, a);
  require_member(set, b);
  require_member(set, c);
  return is_metric_triple(a, b, c);
}

RSet scale(const RSet& set, const Rational& factor) {
  if (factor <= 0) throw ParameterError("scale factor must be positive, got " + to_string(factor));
  std::vector<Interval> ivs;
  ivs.reserve(set.interval_count());
  for (const auto& iv : set.intervals()) ivs.push_back({iv.lo * factor, iv.hi * factor});
  return RSet(std::move(ivs));
}

RSet truncate(const RSet& set, const Rational& bound) {
  if (bound < 0) throw ParameterError("truncation bound must be >= 0, got " + to_string(bound));
  std::vector<Interval> ivs;
  for (const auto& iv : set.intervals()) {
    if (iv.lo > bound) break;
    ivs.push_back({iv.lo, iv.hi < bound ? iv.hi : bound});
  }
  if (ivs.empty()) throw ParameterError("truncation of " + to_string(set) + " at " + to_string(bound) + " is empty");
  return RSet(std::move(ivs));
}

TranslatedUnion translate_union(const RSet& set, const Rational& period, std::size_t copies) {
  if (period <= 2 * set.max()) {
    throw ParameterError("translation period " + to_string(period) + " must exceed 2*max = " +
                         to_string(2 * set.max()));
  }
  if (copies < 1) throw ParameterError("translate_union needs at least one copy");
  std::vector<Interval> ivs;
  ivs.reserve(set.interval_count() * copies);
  for (std::size_t n = 0; n < copies; ++n) {
    const Rational shift = period * static_cast<unsigned long>(n);
    for (const auto& iv : set.intervals()) ivs.push_back({iv.lo + shift, iv.hi + shift});
  }
  RSet out(std::move(ivs));
  std::string note = "truncated to " + std::to_string(copies) +
                     " copies; sums above " + to_string(out.max()) +
                     " saturate there instead of reaching copy " + std::to_string(copies);
  return {std::move(out), period, copies, std::move(note)};
}

}  // namespace urysohn
