// One line per acceptance criterion; exits nonzero if any fails.

#include "../desk.hpp"
#include "../oracles.hpp"

#include "urysohn/approximation.hpp"
#include "urysohn/cantor.hpp"
#include "urysohn/checks.hpp"
#include "urysohn/construction.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/rgraph.hpp"
#include "urysohn/spaces.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace urysohn;
using oracle::q;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure and keeps going quietly afterwards.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void note(const std::string& s) {
    if (out_.ok) out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

int run(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs >= limit_s) {
    out.ok = false;
    out.detail = "over the time limit";
  }
  std::printf("%s %d %s (%.2f s / %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs, limit_s,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok ? 0 : 1;
}

std::string str(const Rational& x) { return to_string(x); }

Outcome middle_third() {
  Check c;
  const auto r = check_associativity(cantor_set(WeightVector({q(1, 3), q(1, 3)})), 0, 1);
  c.expect(r.failed(), "no failure reported");
  if (r.failed()) {
    c.expect(r.witness_value("a") == q(1, 3) && r.witness_value("b") == q(2, 9) && r.witness_value("c") == q(1, 9),
             "witness is not (1/3, 2/9, 1/9)");
    c.expect(r.lhs && r.rhs && *r.lhs == q(1, 3) && *r.rhs == q(2, 3), "sides are not 1/3 and 2/3");
  }
  return c.result();
}

Outcome four_values_equivalence() {
  Check c;
  std::mt19937_64 rng(2024);
  std::size_t assoc = 0;
  const std::size_t n = 240;
  for (std::size_t t = 0; t < n; ++t) {
    const auto elems = oracle::random_finite(rng, 8, 12, 36);
    const RSet set = RSet::points(elems);
    const bool four = check_4values(set, 0, t).passed();
    const bool as = check_associativity(set, 0, t).passed();
    c.expect(four == as, "disagreement on " + to_string(set));
    c.expect(as == oracle::associative(elems), "associativity differs from brute force on " + to_string(set));
    c.expect(four == oracle::four_values(elems), "4-values differs from brute force on " + to_string(set));
    assoc += as;
  }
  c.note(std::to_string(n) + " sets, " + std::to_string(assoc) + " associative");
  return c.result();
}

// R is a random associative finite set, an interval or a Cantor set with weights above 1/3.
RSet random_ground(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0:
      while (true) {
        auto elems = oracle::random_finite(rng, 8, 6, 18);
        if (elems.size() > 1 && oracle::associative(elems)) return RSet::points(elems);
      }
    case 1:
      return RSet::interval(q(0), q(1 + static_cast<long long>(rng() % 4)));
    default: {
      std::vector<Rational> w;
      for (std::size_t i = 0, k = 1 + rng() % 2; i < k; ++i) w.push_back(q(3 + static_cast<long long>(rng() % 3), 8));
      return cantor_set(WeightVector(w));
    }
  }
}

// Random members of R: elements of a finite R, or grid points inside its intervals.
std::vector<Rational> random_members(std::mt19937_64& rng, const RSet& R, std::size_t k) {
  std::vector<Rational> out{q(0), R.max()};
  for (std::size_t i = 0; i < k; ++i) {
    const auto& ivs = R.intervals();
    const auto& iv = ivs[rng() % ivs.size()];
    const long long den = 1 + static_cast<long long>(rng() % 6);
    const Rational x = iv.lo + (iv.hi - iv.lo) * q(static_cast<long long>(rng() % (den + 1)), den);
    out.push_back(x);
  }
  return out;
}

Outcome closure_termination() {
  Check c;
  std::mt19937_64 rng(77);
  const Rational eps = q(1, 4);
  std::size_t approximations = 0;
  for (int t = 0; t < 100; ++t) {
    const RSet R = random_ground(rng);
    const RSet A = RSet::points(random_members(rng, R, 1 + rng() % 5));
    const auto elems = A.elements();
    if (elems.size() < 2) continue;
    const Rational w1 = elems[1];
    const Rational ratio = R.max() / w1;
    const auto bound = static_cast<std::size_t>(2 * ((numerator_of(ratio) + denominator_of(ratio) - 1) /
                                                     denominator_of(ratio)) +
                                                2);
    const auto res = subadditive_closure(A, R);
    const std::string tag = " for A = " + to_string(A) + " in " + to_string(R);
    c.expect(res.trace.fixpoint_index + 1 <= bound, "too many iterations" + tag);
    const auto S = res.closed.elements();
    for (const auto& a : S) {
      c.expect(contains(R, a), "closure leaves R" + tag);
      for (const auto& b : S) c.expect(res.closed.contains(*R.sup_below(a + b)), "closure not closed" + tag);
    }
    for (const auto& a : elems) c.expect(res.closed.contains(a), "closure misses A" + tag);
    if (is_eps_approximation(A, R, eps)) {
      ++approximations;
      c.expect(is_eps_approximation(res.closed, R, eps), "closure lost the approximation" + tag);
    }
    c.expect(check_4values_exhaustive(res.closed).passed(), "closure fails 4-values" + tag);
  }
  c.note(std::to_string(approximations) + " of the inputs were 1/4-approximations");
  return c.result();
}

// A connected subgraph of a random metric space is a metric R-graph.
RGraph random_metric_graph(std::mt19937_64& rng) {
  RSet set = desk::set();
  while (true) {
    auto elems = oracle::random_finite(rng, 7, 6, 18);
    if (elems.size() > 1 && oracle::associative(elems)) {
      set = RSet::points(elems);
      break;
    }
  }
  const std::size_t n = 2 + rng() % 7;
  const auto M = oracle::random_space(rng, set, n);
  RGraph g(set, M.points());
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = rng() % v;
    g.add_edge(u, v, M.d(u, v));
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && rng() % 3 == 0) g.add_edge(u, v, M.d(u, v));
  return g;
}

Outcome graph_completion() {
  Check c;
  std::mt19937_64 rng(4040);
  for (int t = 0; t < 100; ++t) {
    const RGraph g = random_metric_graph(rng);
    const auto L = complete_to_metric_space(g);
    const std::size_t n = g.vertex_count();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        c.expect(L.d(a, b) == *oracle::trail_distance(g, a, b), "completion differs from the trail oracle");
        c.expect(contains(g.set(), L.d(a, b)), "entry outside R");
        for (std::size_t x = 0; x < n; ++x) c.expect(L.d(a, b) <= L.d(a, x) + L.d(x, b), "triangle inequality fails");
      }
    for (const auto& e : g.edges()) c.expect(L.d(e.u, e.v) == e.weight, "edge weight not preserved");
  }
  return c.result();
}

bool below(const TreeNode& a, const TreeNode& b) {
  return a.map.size() < b.map.size() && std::equal(a.map.begin(), a.map.end(), b.map.begin());
}

Outcome desk_pipeline() {
  Check c;
  const auto in = desk::input();
  const auto W = derive_companion_W(in);
  for (std::size_t i = 0; i < in.U.size(); ++i)
    for (std::size_t j = 0; j < in.U.size(); ++j)
      c.expect(abs(W.d(i, j) - in.U.d(i, j)) <= in.r, "companion differs from U by more than r");
  std::size_t pairs = 0, copies = 0;
  for (std::size_t depth = 1; depth <= 4; ++depth) {
    const Construction con = build_H_and_L(in, depth);
    c.expect(is_metric(con.H).passed(), "H is not metric at depth " + std::to_string(depth));
    const auto& nodes = con.tree.nodes;
    for (const auto& a : nodes)
      for (const auto& b : nodes) {
        if (!below(a, b)) continue;
        ++pairs;
        const auto w = con.H.weight(con.H.index_of(a.id()), con.H.index_of(b.id()));
        c.expect(w && *w == con.L.d(a.id(), b.id()), "comparable pair without its H edge");
        c.expect(abs(con.L.d(a.id(), b.id()) - in.U.d(a.anchor(), b.anchor())) <= in.r,
                 "tree inequality fails on " + a.id() + ", " + b.id());
      }
    // Every branch of the tree is an order preserving isometric map of an initial segment of U.
    for (const auto& node : nodes) {
      const NearbyCopy copy = find_nearby_copy(con.L, node.map, in, depth);
      copies += !copy.points.empty();
      for (const auto& p : copy.points) {
        bool near = false;
        for (auto u : node.map) near = near || con.L.d(p, in.U.points()[u]) <= in.r;
        c.expect(near, "copy point " + p + " is farther than r from the embedded U");
      }
    }
  }
  c.note(std::to_string(pairs) + " comparable pairs, " + std::to_string(copies) + " nonempty copies");
  return c.result();
}

Outcome fat_cantor() {
  Check c;
  std::mt19937_64 rng(909);
  const long long M = 60;
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> w;
    for (std::size_t i = 0, k = 1 + rng() % 6; i < k; ++i)
      w.push_back(q(M + 1 + static_cast<long long>(rng() % (2 * M - 1)), 3 * M));
    const auto r = check_associativity(cantor_set(WeightVector(w)), 0, static_cast<std::uint64_t>(t));
    std::ostringstream os;
    for (const auto& x : w) os << str(x) << ' ';
    c.expect(r.passed(), "failure reported for weights " + os.str());
  }
  c.expect(check_associativity(cantor_set(WeightVector({q(1, 3), q(1, 3)})), 0, 1).failed(),
           "control (1/3, 1/3) passed");
  return c.result();
}

Outcome saturation() {
  Check c;
  const RSet S = desk::set();
  const auto sat = build_saturated_space(S, 60, 2, 1);
  c.expect(sat.saturated, "not saturated at " + std::to_string(sat.space.size()) + " points, " +
                              std::to_string(sat.pending) + " functions pending");
  c.expect(check_universality(sat.space, S, 3).passed(), "some 3-point space does not embed");
  c.note("saturated at " + std::to_string(sat.space.size()) + " points");
  return c.result();
}

// Random points of the plane with coordinates in [0, 1/2] under the l1 metric.
FiniteMetricSpace random_unit_space(std::mt19937_64& rng, const RSet& R) {
  const std::size_t n = 2 + rng() % 5;
  std::vector<std::pair<Rational, Rational>> pts;
  while (pts.size() < n) {
    const long long den = 2 * (1 + static_cast<long long>(rng() % 12));
    std::pair<Rational, Rational> p{q(static_cast<long long>(rng() % (den / 2 + 1)), den),
                                    q(static_cast<long long>(rng() % (den / 2 + 1)), den)};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = abs(pts[i].first - pts[j].first) + abs(pts[i].second - pts[j].second);
  return oracle::space(R, std::move(m));
}

Outcome distortion() {
  Check c;
  const RSet R = RSet::interval(q(0), q(1));
  const RSet S = make_eps_approximation(R, q(1, 8), {}, q(1, 16));
  const auto elems = S.elements();
  std::mt19937_64 rng(8181);
  std::size_t exact = 0, moved = 0;
  for (int t = 0; t < 50; ++t) {
    const auto V = random_unit_space(rng, R);
    const auto rounded = round_up_space(V, S);
    const auto& X = rounded.space;
    for (std::size_t i = 0; i < V.size(); ++i)
      for (std::size_t j = 0; j < V.size(); ++j) {
        for (std::size_t k = 0; k < V.size(); ++k) c.expect(X.d(i, j) <= X.d(i, k) + X.d(k, j), "rounded space not metric");
        if (i == j) continue;
        const Rational d = V.d(i, j);
        Rational up = elems.back();
        for (const auto& s : elems)
          if (s >= d && s < up) up = s;
        c.expect(X.d(i, j) == up, "round-up differs from the least element above");
        const Rational dist = X.d(i, j) - d;
        c.expect(dist >= 0 && dist < q(1, 8), "distortion " + str(dist) + " out of [0, 1/8)");
        const bool in_s = std::binary_search(elems.begin(), elems.end(), d);
        if (!in_s) c.expect(dist > 0, "zero distortion on a distance outside S");
        (in_s ? exact : moved) += i < j;
      }
  }
  c.note(std::to_string(exact) + " pairs already in S, " + std::to_string(moved) + " moved");
  return c.result();
}

Outcome partition_modulus() {
  Check c;
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    RSet set = desk::set();
    auto elems = oracle::random_finite(rng, 7, 8, 24);
    if (elems.size() > 1) set = RSet::points(elems);
    const std::size_t n = 2 + rng() % 8;
    const auto M = oracle::random_space(rng, set, n);
    std::vector<std::size_t> X;
    while (X.empty() || X.size() == n) {
      X.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 2) X.push_back(i);
    }
    const auto f = partition_distance_function(M, X);
    for (std::size_t p = 0; p < n; ++p) {
      const bool in = std::find(X.begin(), X.end(), p) != X.end();
      std::optional<Rational> g;
      for (std::size_t y = 0; y < n; ++y)
        if ((std::find(X.begin(), X.end(), y) != X.end()) != in && (!g || M.d(p, y) < *g)) g = M.d(p, y);
      c.expect(f[p] == *g, "f differs from the distance to the other part");
      for (std::size_t r = 0; r < n; ++r) c.expect(abs(f[p] - f[r]) <= 2 * M.d(p, r), "modulus fails");
    }
  }
  return c.result();
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "middle-third counterexample", 1, middle_third);
  failed += run(2, "4-values equals associativity", 30, four_values_equivalence);
  failed += run(3, "subadditive closure terminates", 30, closure_termination);
  failed += run(4, "graph completion", 60, graph_completion);
  failed += run(5, "bridge pipeline on the small example", 10, desk_pipeline);
  failed += run(6, "fat Cantor sets are associative", 60, fat_cantor);
  failed += run(7, "saturation and universality", 60, saturation);
  failed += run(8, "round-up distortion", 30, distortion);
  failed += run(9, "partition function modulus", 10, partition_modulus);
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
