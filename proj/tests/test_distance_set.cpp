#include "oracles.hpp"

#include "urysohn/approximation.hpp"
#include "urysohn/cantor.hpp"
#include "urysohn/checks.hpp"
#include "urysohn/errors.hpp"

#include <doctest.h>

using namespace urysohn;
using oracle::q;

namespace {

RSet middle_third() { return cantor_set(WeightVector({q(1, 3), q(1, 3)})); }

RSet int_set(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) v.emplace_back(x);
  return RSet::points(v);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("-2/3") == q(-2, 3));
  CHECK(to_string(q(4, 2)) == "2");
  CHECK(to_string(q(2, 6)) == "1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.3"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(parse_rational_list("2/5,1/2") == std::vector<Rational>{q(2, 5), q(1, 2)});
}

TEST_CASE("sets normalize their intervals") {
  RSet a({{q(1), q(2)}, {q(0), q(1)}, {q(3), q(3)}});
  CHECK(a.interval_count() == 2);
  CHECK(a == RSet({{q(0), q(2)}, {q(3), q(3)}}));
  CHECK_THROWS_AS(RSet(std::vector<Interval>{}), ParameterError);
  CHECK_THROWS_AS(RSet({{q(2), q(1)}}), ParameterError);
  CHECK_THROWS_AS(RSet({{q(-1), q(1)}}), ParameterError);
}

TEST_CASE("membership") {
  CHECK(contains(RSet::interval(q(0), q(1)), q(1, 2)));
  CHECK_FALSE(contains(RSet({{q(0), q(0)}, {q(1, 3), q(1, 2)}}), q(1, 4)));
  CHECK_FALSE(contains(middle_third(), q(5, 9)));
  CHECK(contains(middle_third(), q(2, 9)));
  CHECK_FALSE(contains(RSet::interval(q(0), q(1)), q(-1)));
}

TEST_CASE("oplus matches the brute force maximum on finite sets") {
  const RSet s = int_set({0, 1, 2, 3});
  CHECK(oplus(s, q(2), q(2)) == 3);
  CHECK(oplus(RSet::interval(q(0), q(1)), q(1, 2), q(1, 4)) == q(3, 4));
  CHECK(oplus(middle_third(), q(1, 3), q(2, 9)) == q(1, 3));
  CHECK_THROWS_AS(oplus(s, q(4), q(1)), MembershipError);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto elems = oracle::random_finite(rng, 8, 12, 30);
    const RSet set = RSet::points(elems);
    for (const auto& a : elems)
      for (const auto& b : elems) REQUIRE(oplus(set, a, b) == oracle::oplus(elems, a, b));
  }
}

TEST_CASE("oplus fold") {
  const RSet s = int_set({0, 1, 2, 3});
  CHECK(oplus_fold(s, std::vector<Rational>{q(1), q(1), q(1)}) == 3);
  CHECK(oplus_fold(RSet::interval(q(0), q(1)), std::vector<Rational>{q(1, 4)}) == q(1, 4));
  CHECK(oplus_fold(s, std::vector<Rational>{q(2), q(2), q(2)}) == 3);
}

TEST_CASE("metric triples") {
  const RSet s = int_set({0, 1, 2, 3});
  CHECK(is_metric_triple(s, q(1), q(2), q(3)));
  CHECK_FALSE(is_metric_triple(int_set({0, 1, 2, 3, 5}), q(1), q(2), q(5)));
  CHECK(is_metric_triple(RSet::interval(q(0), q(1)), q(2, 7), q(2, 7), q(0)));
}

TEST_CASE("associativity check") {
  const auto pass = check_associativity(int_set({0, 1, 2, 3}), 0, 1);
  CHECK(pass.verdict == Verdict::PassedExhaustive);

  const auto fail = check_associativity(int_set({0, 1, 2, 3, 5}), 0, 1);
  REQUIRE(fail.failed());
  CHECK(fail.witness_value("a") == 2);
  CHECK(fail.witness_value("b") == 2);
  CHECK(fail.witness_value("c") == 1);
  CHECK(*fail.lhs == 3);
  CHECK(*fail.rhs == 5);

  const auto cantor = check_associativity(middle_third(), 100, 1);
  REQUIRE(cantor.failed());
  CHECK(cantor.witness_value("a") == q(1, 3));
  CHECK(cantor.witness_value("b") == q(2, 9));
  CHECK(cantor.witness_value("c") == q(1, 9));
  CHECK(*cantor.lhs == q(1, 3));
  CHECK(*cantor.rhs == q(2, 3));

  const auto unit = check_associativity(RSet::interval(q(0), q(1)), 200, 3);
  CHECK(unit.verdict == Verdict::PassedHeuristic);
  CHECK(unit.sample_count == 200);
}

TEST_CASE("failure witnesses re-evaluate to their sides") {
  std::mt19937_64 rng(11);
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    const auto elems = oracle::random_finite(rng, 7, 6, 12);
    const RSet set = RSet::points(elems);
    const auto r = check_associativity(set, 0, 1);
    REQUIRE(r.failed() == !oracle::associative(elems));
    if (!r.failed()) continue;
    ++failures;
    const auto a = r.witness_value("a"), b = r.witness_value("b"), c = r.witness_value("c");
    const Rational lhs = oracle::oplus(elems, oracle::oplus(elems, a, b), c);
    const Rational rhs = oracle::oplus(elems, a, oracle::oplus(elems, b, c));
    CHECK(lhs != rhs);
    CHECK(((lhs == *r.lhs && rhs == *r.rhs) || (lhs == *r.rhs && rhs == *r.lhs) ||
           oracle::oplus(elems, oracle::oplus(elems, a, c), b) == *r.lhs ||
           oracle::oplus(elems, oracle::oplus(elems, a, c), b) == *r.rhs));
  }
  CHECK(failures > 0);
}

TEST_CASE("4-values check agrees with the literal definition") {
  CHECK(check_4values(int_set({0, 1, 2, 3}), 0, 1).verdict == Verdict::PassedExhaustive);
  CHECK(check_4values(int_set({0, 1, 2, 3, 5}), 0, 1).failed());
  CHECK(check_4values(RSet::interval(q(0), q(1)), 100, 1).passed());

  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const auto elems = oracle::random_finite(rng, 7, 6, 12);
    const auto r = check_4values(RSet::points(elems), 0, 1);
    REQUIRE(r.failed() == !oracle::four_values(elems));
    if (r.failed()) {
      const auto a = r.witness_value("a"), b = r.witness_value("b"), c = r.witness_value("c"),
                 d = r.witness_value("d"), x = r.witness_value("x");
      CHECK(oracle::metric(a, b, x));
      CHECK(oracle::metric(c, d, x));
      for (const auto& y : elems) CHECK_FALSE((oracle::metric(a, d, y) && oracle::metric(c, b, y)));
    }
  }
}

TEST_CASE("require_associative") {
  CHECK_NOTHROW(require_associative(int_set({0, 1, 2, 3})));
  CHECK_THROWS_AS(require_associative(int_set({0, 1, 2, 3, 5})), ParameterError);
  CHECK_THROWS_AS(require_associative(int_set({1, 2})), ParameterError);
}

TEST_CASE("scale, truncate and translated unions") {
  CHECK(scale(RSet::interval(q(0), q(1)), q(1, 2)) == RSet::interval(q(0), q(1, 2)));
  CHECK(truncate(int_set({0, 1, 2, 3}), q(2)) == int_set({0, 1, 2}));
  CHECK(translate_union(int_set({0, 1}), q(3), 2).set == int_set({0, 1, 3, 4}));
  CHECK_THROWS_AS(translate_union(RSet::interval(q(0), q(1)), q(2), 2), ParameterError);
  const RSet three = translate_union(int_set({0, 1}), q(3), 3).set;
  CHECK(three == int_set({0, 1, 3, 4, 6, 7}));
  CHECK(check_associativity(three, 0, 1).verdict == Verdict::PassedExhaustive);

  std::mt19937_64 rng(9);
  int passing = 0;
  for (int t = 0; t < 80; ++t) {
    const auto elems = oracle::random_finite(rng, 6, 4, 10);
    const RSet set = RSet::points(elems);
    if (check_4values(set, 0, 1).failed()) continue;
    ++passing;
    CHECK(check_4values(scale(set, q(3, 7)), 0, 1).passed());
    CHECK(check_4values(truncate(set, elems[elems.size() / 2]), 0, 1).passed());
  }
  CHECK(passing > 5);
}

TEST_CASE("round_up") {
  const RSet grid = RSet::points({q(0), q(1, 4), q(1, 2), q(3, 4), q(1)});
  CHECK(round_up(grid, q(3, 10)) == q(1, 2));
  CHECK(round_up(grid, q(3, 4)) == q(3, 4));
  CHECK(round_up(grid, q(0)) == 0);
  CHECK_THROWS_AS(round_up(grid, q(2)), RangeError);
  CHECK_THROWS_AS(round_up(RSet::interval(q(0), q(1)), q(1, 2)), ParameterError);
}

TEST_CASE("eps-approximations") {
  const RSet unit = RSet::interval(q(0), q(1));
  const RSet grid = RSet::points({q(0), q(1, 4), q(1, 2), q(3, 4), q(1)});
  CHECK(is_eps_approximation(grid, unit, q(1, 4)));
  CHECK_FALSE(is_eps_approximation(grid, unit, q(1, 4) - q(1, 100)));
  const RSet coarse = RSet::points({q(0), q(1, 2), q(1)});
  CHECK_FALSE(is_eps_approximation(coarse, grid, q(1, 4)));
  CHECK(is_eps_approximation(coarse, grid, q(1, 4) + q(1, 100)));
  CHECK_FALSE(is_eps_approximation(RSet::points({q(1)}), unit, q(1, 2)));
  const RSet s = RSet::points({q(0), q(1), q(2), q(3)});
  CHECK(is_eps_approximation(s, s, q(1, 1000)));
  CHECK_THROWS_AS(is_eps_approximation(RSet::points({q(0), q(5)}), unit, q(1)), SubsetError);

  // A gap at the lower end of which R accumulates may have length exactly eps.
  CHECK(is_eps_approximation(RSet::points({q(0), q(1, 2), q(1)}), RSet({{q(0), q(0)}, {q(1, 2), q(1)}}), q(1, 2)));
}

TEST_CASE("subadditive closure") {
  const RSet unit = RSet::interval(q(0), q(1));
  const RSet grid = RSet::points({q(1, 4), q(1, 2), q(3, 4), q(1)});
  auto r = subadditive_closure(grid, unit);
  CHECK(r.closed == grid);
  CHECK(r.trace.fixpoint_index == 0);

  r = subadditive_closure(RSet::points({q(1, 3), q(1)}), unit);
  CHECK(r.closed == RSet::points({q(1, 3), q(2, 3), q(1)}));
  CHECK(r.trace.minima.front() == q(1, 3));
  CHECK(r.trace.minima.at(1) == q(2, 3));
  CHECK(r.trace.iterates.size() <= r.trace.cap);

  CHECK(subadditive_closure(RSet::points({q(1)}), RSet::points({q(0), q(1)})).closed == RSet::points({q(1)}));
  CHECK_THROWS_AS(subadditive_closure(RSet::points({q(0)}), unit), ParameterError);
  CHECK_THROWS_AS(subadditive_closure(RSet::points({q(2)}), unit), SubsetError);
}

TEST_CASE("closure against the brute force fixpoint") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto elems = oracle::random_finite(rng, 8, 6, 12);
    const RSet R = RSet::points(elems);
    if (check_associativity(R, 0, 1).failed()) continue;
    std::vector<Rational> seed;
    for (const auto& e : elems)
      if (e > 0 && rng() % 2) seed.push_back(e);
    if (seed.empty()) seed.push_back(elems.back());

    std::vector<Rational> cur = seed;
    while (true) {
      std::vector<Rational> next = cur;
      for (const auto& a : cur)
        for (const auto& b : cur) next.push_back(oracle::oplus(elems, a, b));
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next == cur) break;
      cur = next;
    }
    const auto r = subadditive_closure(RSet::points(seed), R);
    CHECK(r.closed == RSet::points(cur));
    CHECK(is_subadditive_closed(r.closed, R));
  }
}

TEST_CASE("make_eps_approximation") {
  const RSet unit = RSet::interval(q(0), q(1));
  const Rational eps = q(1, 4) + q(1, 100);
  const std::vector<Rational> one{q(1)};
  CHECK(make_eps_approximation(unit, eps, one, q(1, 4)) == RSet::points({q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}));

  const RSet s = RSet::points({q(0), q(1), q(2), q(3)});
  const auto all = s.elements();
  CHECK(make_eps_approximation(s, q(100), all) == s);

  const RSet gap({{q(0), q(0)}, {q(1, 2), q(1)}});
  const RSet a = make_eps_approximation(gap, q(1, 8), {});
  CHECK(a.contains(q(1, 2)));
  CHECK(a.contains(q(1)));
  CHECK(is_eps_approximation(a, gap, q(1, 8)));
  CHECK(is_subadditive_closed(a, gap));

  const RSet b = make_eps_approximation(unit, q(1, 8), {}, q(1, 16));
  CHECK(*b.min_positive() == q(1, 16));
  CHECK(is_eps_approximation(b, unit, q(1, 8)));
  CHECK(check_4values_exhaustive(b).passed());

  CHECK_THROWS_AS(make_eps_approximation(unit, q(0), {}), ParameterError);
  CHECK_THROWS_AS(make_eps_approximation(unit, q(1, 8), {}, q(1, 4)), ParameterError);
  const std::vector<Rational> low{q(1, 32)};
  CHECK_THROWS_AS(make_eps_approximation(unit, q(1, 8), low, q(1, 16)), ParameterError);
}
