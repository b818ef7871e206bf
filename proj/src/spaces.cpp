#include "urysohn/spaces.hpp"

#include "urysohn/approximation.hpp"
#include "urysohn/checks.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/rgraph.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace urysohn {

std::vector<std::size_t> eps_neighborhood(const FiniteMetricSpace& M, std::span<const std::size_t> A,
                                          const Rational& eps) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < M.size(); ++x) {
    for (auto y : A) {
      if (M.d(x, y) < eps) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

bool is_katetov(const FiniteMetricSpace& M, const KatetovFunction& f) {
  if (f.domain.size() != f.values.size()) return false;
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    if (f.values[i] <= 0 || !M.set().contains(f.values[i])) return false;
    for (std::size_t j = i + 1; j < f.domain.size(); ++j) {
      const auto& d = M.d(f.domain[i], f.domain[j]);
      if (abs(f.values[i] - f.values[j]) > d || d > f.values[i] + f.values[j]) return false;
    }
  }
  return true;
}

std::vector<KatetovFunction> enumerate_katetov(const FiniteMetricSpace& M, std::span<const std::size_t> F,
                                               const RSet& S) {
  auto vals = S.elements();
  vals.erase(std::remove(vals.begin(), vals.end(), Rational(0)), vals.end());
  std::vector<KatetovFunction> out;
  KatetovFunction f{{F.begin(), F.end()}, std::vector<Rational>(F.size())};
  // Fixes positions left to right, pruning on the constraints so far.
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == F.size()) {
      out.push_back(f);
      return;
    }
    for (const auto& v : vals) {
      bool ok = true;
      for (std::size_t j = 0; j < pos && ok; ++j) {
        const auto& d = M.d(F[pos], F[j]);
        ok = abs(v - f.values[j]) <= d && d <= v + f.values[j];
      }
      if (!ok) continue;
      f.values[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<std::size_t> find_realization(const FiniteMetricSpace& M, const KatetovFunction& f) {
  for (std::size_t y = 0; y < M.size(); ++y) {
    bool ok = true;
    for (std::size_t i = 0; i < f.domain.size() && ok; ++i) ok = M.d(y, f.domain[i]) == f.values[i];
    if (ok && std::find(f.domain.begin(), f.domain.end(), y) == f.domain.end()) return y;
  }
  return std::nullopt;
}

namespace {

// Saturation bookkeeping on indices into the finite value list of S.
class Saturator {
 public:
  using Key = std::vector<std::uint32_t>;  // sorted domain, then values

  Saturator(const RSet& S, std::size_t arity, std::uint64_t seed, ExtensionRule rule)
      : set_(S), vals_(S.elements()), arity_(arity), rng_(seed), rule_(rule) {
    const std::size_t m = vals_.size();
    ok_.assign(m * m * m, false);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) ok_[(a * m + b) * m + c] = is_metric_triple(vals_[a], vals_[b], vals_[c]);
    dist_.push_back({0});
    add_functions_touching(0);
  }

  std::size_t size() const { return dist_.size(); }
  std::size_t pending() const { return pending_.size(); }

  void grow() {
    std::vector<std::uint32_t> row;
    if (rule_ == ExtensionRule::Completion) {
      auto [cand, fixed] = prescribed_row(pending_[rng_() % pending_.size()]);
      complete(cand, fixed);
      row = std::move(cand);
    } else {
      // Several seeded targets; keep the row with the best net effect.
      // In the endgame every pending function is tried as the target.
      std::vector<std::size_t> targets;
      if (pending_.size() <= 16) {
        targets.resize(pending_.size());
        std::iota(targets.begin(), targets.end(), 0);
      } else {
        for (std::size_t t = 0; t < 4; ++t) targets.push_back(rng_() % pending_.size());
      }
      long best_net = 0;
      for (auto target : targets) {
        auto [cand, fixed] = prescribed_row(pending_[target]);
        complete(cand, fixed);
        const long net = assign_annealed(cand, fixed);
        if (row.empty() || net > best_net) {
          best_net = net;
          row = std::move(cand);
        }
      }
    }
    // Every entry is now set; completion only confirms the graph is metric.
    complete(row, std::vector<bool>(dist_.size(), true));
    add_point(row);
  }

  FiniteMetricSpace space() const {
    const std::size_t n = dist_.size();
    std::vector<std::string> ids;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      ids.push_back("x" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) m[i][j] = vals_[dist_[i][j]];
    }
    return FiniteMetricSpace(set_, std::move(ids), std::move(m));
  }

 private:
  std::pair<std::vector<std::uint32_t>, std::vector<bool>> prescribed_row(const Key& key) const {
    const std::size_t k = key.size() / 2;
    std::vector<std::uint32_t> row(dist_.size(), 0);
    std::vector<bool> fixed(dist_.size(), false);
    for (std::size_t i = 0; i < k; ++i) {
      row[key[i]] = key[k + i];
      fixed[key[i]] = true;
    }
    return {std::move(row), std::move(fixed)};
  }

  bool ok(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    const std::size_t m = vals_.size();
    return ok_[(a * m + b) * m + c];
  }

  // Domains of size <= arity that contain p, as sorted index lists.
  void domains_with(std::size_t p, std::size_t limit, std::vector<std::vector<std::uint32_t>>& out) const {
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      std::vector<std::uint32_t> dom = cur;
      dom.push_back(static_cast<std::uint32_t>(p));
      std::sort(dom.begin(), dom.end());
      out.push_back(std::move(dom));
      if (cur.size() + 1 >= arity_) return;
      for (std::size_t q = start; q < limit; ++q) {
        cur.push_back(static_cast<std::uint32_t>(q));
        self(self, q + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }

  bool realized(const Key& key) const {
    const std::size_t k = key.size() / 2;
    for (std::size_t y = 0; y < dist_.size(); ++y) {
      bool hit = true;
      for (std::size_t i = 0; i < k && hit; ++i) hit = key[i] != y && dist_[y][key[i]] == key[k + i];
      if (hit) return true;
    }
    return false;
  }

  void add_functions_touching(std::size_t p) {
    std::vector<std::vector<std::uint32_t>> doms;
    domains_with(p, p, doms);
    for (const auto& dom : doms) {
      const std::size_t k = dom.size();
      Key key(dom);
      key.resize(2 * k);
      auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == k) {
          if (!realized(key)) insert(key);
          return;
        }
        for (std::uint32_t v = 1; v < vals_.size(); ++v) {
          bool good = true;
          for (std::size_t j = 0; j < pos && good; ++j) good = ok(v, key[k + j], dist_[dom[pos]][dom[j]]);
          if (!good) continue;
          key[k + pos] = v;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
  }

  void insert(const Key& key) {
    if (index_.emplace(key, pending_.size()).second) {
      pending_.push_back(key);
      birth_.push_back(dist_.size());
    }
  }

  void erase_at(std::size_t i) {
    index_.erase(pending_[i]);
    if (i + 1 != pending_.size()) {
      pending_[i] = std::move(pending_.back());
      birth_[i] = birth_.back();
      index_[pending_[i]] = i;
    }
    pending_.pop_back();
    birth_.pop_back();
  }

  // Seeded annealing over the row of the new point, starting from the
  // completion row. Energy rewards realized pending functions, penalizes
  // functions on the new point and one old point that nothing realizes, and
  // penalizes pairs breaking the Katetov constraints. The best admissible row
  // seen is kept, so the result is always a Katetov function.
  long assign_annealed(std::vector<std::uint32_t>& row, const std::vector<bool>& prescribed) {
    const std::size_t n = dist_.size();
    const std::size_t m = vals_.size();
    std::vector<std::size_t> free;
    for (std::size_t y = 0; y < n; ++y)
      if (!prescribed[y]) free.push_back(y);
    if (free.empty() || m < 3) return 0;

    std::vector<std::vector<std::size_t>> keys_of(n);
    for (std::size_t i = 0; i < pending_.size(); ++i) {
      const std::size_t k = pending_[i].size() / 2;
      for (std::size_t j = 0; j < k; ++j) keys_of[pending_[i][j]].push_back(i);
    }
    auto matches = [&](std::size_t i) {
      const Key& key = pending_[i];
      const std::size_t k = key.size() / 2;
      for (std::size_t j = 0; j < k; ++j)
        if (row[key[j]] != key[k + j]) return false;
      return true;
    };
    const bool pairs = arity_ >= 2;
    std::vector<std::size_t> cnt(pairs ? n * m * m : 0);
    std::vector<std::size_t> single(m, 0);
    auto c_at = [&](std::size_t q, std::uint32_t f, std::uint32_t g) -> std::size_t& { return cnt[(q * m + f) * m + g]; };
    auto created_at = [&](std::size_t q) {
      long out = 0;
      for (std::uint32_t f = 1; f < m; ++f)
        for (std::uint32_t g = 1; g < m; ++g) out += ok(f, g, row[q]) && c_at(q, f, g) == 0;
      return out;
    };
    long gained = 0, created = 0, viol = 0;
    for (std::size_t i = 0; i < pending_.size(); ++i) gained += matches(i);
    for (std::size_t y = 0; y < n; ++y) ++single[row[y]];
    for (std::uint32_t v = 1; v < m; ++v) created += single[v] == 0;
    if (pairs) {
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t y = 0; y < n; ++y)
          if (y != q) ++c_at(q, row[y], dist_[y][q]);
      for (std::size_t q = 0; q < n; ++q) created += created_at(q);
    }
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) viol += !ok(row[y], row[z], dist_[y][z]);

    const long penalty = 4;
    auto energy = [&] { return gained - created - penalty * viol; };
    std::vector<std::uint32_t> best = row;
    long best_value = gained - created;  // the completion row is admissible
    long current = energy();

    auto flip = [&](std::size_t y, std::uint32_t b) {
      const std::uint32_t a = row[y];
      for (auto i : keys_of[y]) gained -= matches(i);
      for (std::size_t z = 0; z < n; ++z)
        if (z != y) viol -= !ok(a, row[z], dist_[y][z]);
      if (--single[a] == 0) ++created;
      if (single[b]++ == 0) --created;
      if (pairs) {
        created -= created_at(y);
        for (std::size_t q = 0; q < n; ++q) {
          if (q == y) continue;
          const std::uint32_t g = dist_[y][q];
          if (--c_at(q, a, g) == 0 && ok(a, g, row[q])) ++created;
          if (c_at(q, b, g)++ == 0 && ok(b, g, row[q])) --created;
        }
      }
      row[y] = b;
      if (pairs) created += created_at(y);
      for (auto i : keys_of[y]) gained += matches(i);
      for (std::size_t z = 0; z < n; ++z)
        if (z != y) viol += !ok(b, row[z], dist_[y][z]);
    };

    const std::size_t steps = 1500 * n;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t step = 0; step < steps; ++step) {
      const double t = 2.0 * std::pow(0.02, static_cast<double>(step) / static_cast<double>(steps));
      const std::size_t y = free[rng_() % free.size()];
      const std::uint32_t a = row[y];
      std::uint32_t b = 1 + static_cast<std::uint32_t>(rng_() % (m - 2));
      if (b >= a) ++b;
      flip(y, b);
      const long next = energy();
      if (next >= current || unit(rng_) < std::exp(static_cast<double>(next - current) / t)) {
        current = next;
        if (viol == 0 && gained - created > best_value) {
          best_value = gained - created;
          best = row;
        }
      } else {
        flip(y, a);
      }
    }
    row = std::move(best);
    return best_value;
  }

  // Distances to unfixed points are the graph distances from the new point.
  void complete(std::vector<std::uint32_t>& row, const std::vector<bool>& fixed) {
    const std::size_t n = dist_.size();
    std::vector<std::string> ids;
    for (std::size_t i = 0; i <= n; ++i) ids.push_back(std::to_string(i));
    RGraph g(set_, std::move(ids));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j, vals_[dist_[i][j]]);
      if (fixed[i]) g.add_edge(i, n, vals_[row[i]]);
    }
    const auto d = distances_from(g, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i]) throw CompletionError("new point is not connected to x" + std::to_string(i));
      const auto idx = static_cast<std::uint32_t>(std::lower_bound(vals_.begin(), vals_.end(), *d[i]) - vals_.begin());
      if (fixed[i] && idx != row[i]) {
        throw CompletionError("prescribed distance to x" + std::to_string(i) + " is not realized by the completion");
      }
      row[i] = idx;
    }
  }

  void add_point(const std::vector<std::uint32_t>& row) {
    const std::size_t p = dist_.size();
    for (std::size_t i = 0; i < p; ++i) dist_[i].push_back(row[i]);
    dist_.push_back(row);
    dist_.back().push_back(0);
    for (std::size_t i = pending_.size(); i-- > 0;) {
      const Key& key = pending_[i];
      const std::size_t k = key.size() / 2;
      bool hit = true;
      for (std::size_t j = 0; j < k && hit; ++j) hit = dist_[p][key[j]] == key[k + j];
      if (hit) erase_at(i);
    }
    add_functions_touching(p);
  }

  const RSet& set_;
  std::vector<Rational> vals_;
  std::size_t arity_;
  std::mt19937_64 rng_;
  ExtensionRule rule_;
  std::vector<bool> ok_;
  std::vector<std::vector<std::uint32_t>> dist_;
  std::vector<Key> pending_;
  std::vector<std::size_t> birth_;
  std::unordered_map<Key, std::size_t, boost::hash<Key>> index_;
};

}  // namespace

SaturatedSpace build_saturated_space(const RSet& S, std::size_t max_points, std::size_t witness_arity,
                                     std::uint64_t seed, const SaturationOptions& options) {
  if (!S.is_finite()) throw ParameterError("saturation needs a finite distance set");
  if (!S.contains_zero()) throw ParameterError("distance set " + to_string(S) + " must contain 0");
  if (max_points == 0 || witness_arity == 0) throw ParameterError("max_points and witness_arity must be positive");
  const auto report = check_4values_exhaustive(S);
  if (report.failed()) throw CheckFailedError(to_string(S) + " fails the 4-values condition");
  if (S.interval_count() == 1) {
    return {FiniteMetricSpace(S, {"x0"}, {{Rational(0)}}), true, 0};
  }
  const std::size_t attempts = std::max<std::size_t>(options.attempts, 1);
  std::optional<SaturatedSpace> best;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::uint64_t derived = seed;
    if (attempt > 0) {
      std::uint32_t words[2];
      seq.generate(words, words + 2);
      derived = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
    }
    Saturator sat(S, witness_arity, derived, options.rule);
    const bool last = attempt + 1 == attempts;
    const std::size_t cap =
        last || options.attempt_points == 0 ? max_points : std::min(max_points, options.attempt_points);
    while (sat.pending() > 0 && sat.size() < cap) sat.grow();
    SaturatedSpace out{sat.space(), sat.pending() == 0, sat.pending()};
    if (out.saturated) return out;
    if (!best || out.pending < best->pending) best = std::move(out);
  }
  return std::move(*best);
}

namespace {

// Upper triangle of a k-point matrix, row by row.
using Triangle = std::vector<std::uint32_t>;

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t k) {
  if (i > j) std::swap(i, j);
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

Triangle canonical(const Triangle& t, std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Triangle best = t;
  Triangle cur(t.size());
  do {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) cur[pair_index(i, j, k)] = t[pair_index(perm[i], perm[j], k)];
    if (cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteMetricSpace> enumerate_spaces(const RSet& S, std::size_t n, std::size_t budget) {
  if (!S.is_finite()) throw ParameterError("space enumeration needs a finite distance set");
  const auto vals = S.elements();
  std::vector<FiniteMetricSpace> out;
  std::size_t seen = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t pairs = k * (k - 1) / 2;
    std::set<Triangle> classes;
    Triangle t(pairs, 1);
    if (vals.size() < 2 && pairs > 0) break;
    while (true) {
      if (++seen > budget) throw BudgetError("space enumeration exceeds the budget of " + std::to_string(budget));
      bool metric = true;
      for (std::size_t a = 0; a < k && metric; ++a)
        for (std::size_t b = a + 1; b < k && metric; ++b)
          for (std::size_t c = 0; c < k && metric; ++c) {
            if (c == a || c == b) continue;
            metric = vals[t[pair_index(a, b, k)]] <= vals[t[pair_index(a, c, k)]] + vals[t[pair_index(c, b, k)]];
          }
      if (metric) classes.insert(canonical(t, k));
      std::size_t pos = 0;
      while (pos < pairs && ++t[pos] == vals.size()) t[pos++] = 1;
      if (pos == pairs) break;
    }
    for (const auto& c : classes) {
      std::vector<std::string> ids;
      std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i) {
        ids.push_back("p" + std::to_string(i));
        for (std::size_t j = 0; j < k; ++j) {
          if (i != j) m[i][j] = vals[c[pair_index(i, j, k)]];
        }
      }
      out.emplace_back(S, std::move(ids), std::move(m));
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> find_embedding(const FiniteMetricSpace& pattern, const FiniteMetricSpace& M,
                                                       std::span<const std::size_t> allowed, std::size_t budget,
                                                       std::size_t* nodes) {
  std::size_t local = 0;
  std::size_t& count = nodes ? *nodes : local;
  const std::size_t k = pattern.size();
  std::vector<std::size_t> image;
  std::vector<bool> used(M.size(), false);
  auto rec = [&](auto&& self) -> bool {
    if (image.size() == k) return true;
    const std::size_t i = image.size();
    for (auto y : allowed) {
      if (used[y]) continue;
      if (++count > budget) throw BudgetError("embedding search exceeds the budget of " + std::to_string(budget));
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = M.d(y, image[j]) == pattern.d(i, j);
      if (!ok) continue;
      used[y] = true;
      image.push_back(y);
      if (self(self)) return true;
      image.pop_back();
      used[y] = false;
    }
    return false;
  };
  if (rec(rec)) return image;
  return std::nullopt;
}

CheckReport check_universality(const FiniteMetricSpace& M, const RSet& S, std::size_t n, std::size_t budget) {
  CheckReport report;
  report.method = "exhaustive-universality";
  const auto spaces = enumerate_spaces(S, n, budget);
  std::vector<std::size_t> all(M.size());
  std::iota(all.begin(), all.end(), 0);
  std::size_t nodes = 0;
  for (const auto& F : spaces) {
    if (find_embedding(F, M, all, budget, &nodes)) continue;
    report.verdict = Verdict::Failed;
    report.witness_points = F.points();
    for (std::size_t i = 0; i < F.size(); ++i)
      for (std::size_t j = i + 1; j < F.size(); ++j) report.witness.emplace_back(
          "d(" + F.points()[i] + "," + F.points()[j] + ")", F.d(i, j));
    report.notes.push_back("a " + std::to_string(F.size()) + "-point space does not embed");
    return report;
  }
  report.notes.push_back(std::to_string(spaces.size()) + " spaces up to isometry embed");
  return report;
}

std::optional<std::size_t> extend_isometry(const FiniteMetricSpace& M, std::span<const std::size_t> domain,
                                           std::span<const std::size_t> image, std::size_t x) {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == x) return image[i];
  }
  for (std::size_t y = 0; y < M.size(); ++y) {
    if (std::find(image.begin(), image.end(), y) != image.end()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < domain.size() && ok; ++i) ok = M.d(y, image[i]) == M.d(x, domain[i]);
    if (ok) return y;
  }
  return std::nullopt;
}

CheckReport check_extension_property(const FiniteMetricSpace& M, std::size_t k, std::size_t budget) {
  if (k == 0) throw ParameterError("k must be at least 1");
  CheckReport report;
  report.method = "exhaustive-extension";
  const std::size_t n = M.size();
  std::size_t count = 0;
  std::vector<std::size_t> domain, image;
  std::vector<bool> used(n, false);
  bool failed = false;

  auto tick = [&] {
    if (++count > budget) throw BudgetError("extension check exceeds the budget of " + std::to_string(budget));
  };
  auto test_all_points = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      if (std::find(domain.begin(), domain.end(), x) != domain.end()) continue;
      tick();
      if (extend_isometry(M, domain, image, x)) continue;
      failed = true;
      report.verdict = Verdict::Failed;
      for (std::size_t i = 0; i < domain.size(); ++i) {
        report.witness_points.push_back(M.points()[domain[i]] + "->" + M.points()[image[i]]);
      }
      report.witness_points.push_back(M.points()[x]);
      report.notes.push_back("no image for " + M.points()[x] + " under the listed partial isometry");
      return;
    }
  };
  // Domains are increasing index lists; images are any injective isometric assignment.
  auto choose_image = [&](auto&& self, std::size_t pos) -> void {
    if (failed) return;
    if (pos == domain.size()) {
      test_all_points();
      return;
    }
    for (std::size_t y = 0; y < n && !failed; ++y) {
      if (used[y]) continue;
      tick();
      bool ok = true;
      for (std::size_t j = 0; j < pos && ok; ++j) ok = M.d(y, image[j]) == M.d(domain[pos], domain[j]);
      if (!ok) continue;
      used[y] = true;
      image.push_back(y);
      self(self, pos + 1);
      image.pop_back();
      used[y] = false;
    }
  };
  auto choose_domain = [&](auto&& self, std::size_t start) -> void {
    if (failed) return;
    if (!domain.empty()) choose_image(choose_image, 0);
    if (domain.size() == k) return;
    for (std::size_t x = start; x < n && !failed; ++x) {
      domain.push_back(x);
      self(self, x + 1);
      domain.pop_back();
    }
  };
  choose_domain(choose_domain, 0);
  return report;
}

std::optional<std::vector<std::size_t>> find_order_embedding(const FiniteMetricSpace& U,
                                                             std::span<const std::size_t> target,
                                                             std::size_t budget, std::optional<std::size_t> prefix) {
  for (auto t : target) {
    if (t >= U.size()) throw ParameterError("target index " + std::to_string(t) + " out of range");
  }
  if (prefix && *prefix > U.size()) throw ParameterError("prefix longer than U");
  std::vector<std::size_t> sorted(target.begin(), target.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t goal = prefix ? *prefix : U.size();
  std::vector<std::size_t> cur, best;
  std::size_t count = 0;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (cur.size() > best.size()) best = cur;
    if (cur.size() == goal) return true;
    const std::size_t i = cur.size();
    for (std::size_t s = from; s < sorted.size(); ++s) {
      if (++count > budget) throw BudgetError("order embedding search exceeds the budget of " + std::to_string(budget));
      const std::size_t y = sorted[s];
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = U.d(y, cur[j]) == U.d(i, j);
      if (!ok) continue;
      cur.push_back(y);
      if (self(self, s + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  if (prefix) {
    if (best.size() != *prefix) return std::nullopt;
  } else if (best.empty()) {
    return std::nullopt;
  }
  return best;
}

std::vector<Rational> partition_distance_function(const FiniteMetricSpace& M, std::span<const std::size_t> X) {
  std::vector<bool> in_x(M.size(), false);
  for (auto x : X) {
    if (x >= M.size()) throw PartitionError("point index " + std::to_string(x) + " out of range");
    in_x[x] = true;
  }
  const auto inside = static_cast<std::size_t>(std::count(in_x.begin(), in_x.end(), true));
  if (inside == 0 || inside == M.size()) throw PartitionError("X must be a nonempty proper subset");
  std::vector<Rational> f(M.size());
  for (std::size_t p = 0; p < M.size(); ++p) {
    std::optional<Rational> best;
    for (std::size_t q = 0; q < M.size(); ++q) {
      if (in_x[q] != in_x[p] && (!best || M.d(p, q) < *best)) best = M.d(p, q);
    }
    f[p] = *best;
  }
  return f;
}

std::size_t Coloring::colors() const {
  return parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end()) + 1;
}

std::optional<ColoredCopy> indivisibility_search(const FiniteMetricSpace& M, const Coloring& coloring,
                                                 const FiniteMetricSpace& target, const Rational& eps,
                                                 std::size_t budget) {
  if (coloring.parts.size() != M.size()) throw ParameterError("coloring must assign every point a color");
  if (eps < 0) throw ParameterError("eps must be >= 0");
  const auto dm = M.distance_values();
  for (const auto& v : target.distance_values()) {
    if (!std::binary_search(dm.begin(), dm.end(), v)) {
      throw ParameterError("target distance " + to_string(v) + " does not occur in M");
    }
  }
  std::size_t nodes = 0;
  for (std::size_t c = 0; c < coloring.colors(); ++c) {
    std::vector<std::size_t> cls;
    for (std::size_t p = 0; p < M.size(); ++p)
      if (coloring.parts[p] == c) cls.push_back(p);
    if (cls.empty()) continue;
    const auto allowed = eps > 0 ? eps_neighborhood(M, cls, eps) : cls;
    if (auto emb = find_embedding(target, M, allowed, budget, &nodes)) return ColoredCopy{c, std::move(*emb)};
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> oscillation_search(const FiniteMetricSpace& M, std::span<const Rational> f,
                                                           const Rational& eps, const FiniteMetricSpace& target,
                                                           std::size_t budget) {
  if (f.size() != M.size()) throw ParameterError("function must assign every point a value");
  const std::size_t k = target.size();
  std::vector<std::size_t> image;
  std::vector<bool> used(M.size(), false);
  std::size_t count = 0;
  auto rec = [&](auto&& self, const Rational* lo, const Rational* hi) -> bool {
    if (image.size() == k) return true;
    const std::size_t i = image.size();
    for (std::size_t y = 0; y < M.size(); ++y) {
      if (used[y]) continue;
      if (++count > budget) throw BudgetError("oscillation search exceeds the budget of " + std::to_string(budget));
      const Rational* nlo = lo && *lo < f[y] ? lo : &f[y];
      const Rational* nhi = hi && *hi > f[y] ? hi : &f[y];
      if (*nhi - *nlo >= eps) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = M.d(y, image[j]) == target.d(i, j);
      if (!ok) continue;
      used[y] = true;
      image.push_back(y);
      if (self(self, nlo, nhi)) return true;
      image.pop_back();
      used[y] = false;
    }
    return false;
  };
  if (rec(rec, nullptr, nullptr)) return image;
  return std::nullopt;
}

RoundedSpace round_up_space(const FiniteMetricSpace& V, const RSet& S) {
  const std::size_t n = V.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  std::vector<std::pair<std::size_t, std::size_t>> exact;
  Rational worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = m[j][i] = round_up(S, V.d(i, j));
      if (m[i][j] == V.d(i, j)) exact.emplace_back(i, j);
      if (m[i][j] - V.d(i, j) > worst) worst = m[i][j] - V.d(i, j);
    }
  }
  try {
    return {FiniteMetricSpace(S, V.points(), std::move(m)), std::move(exact), std::move(worst)};
  } catch (const ParameterError& e) {
    throw CheckFailedError(std::string("rounded distances are not a metric: ") + e.what());
  }
}

}  // namespace urysohn
