#include "oracles.hpp"

#include "urysohn/cantor.hpp"
#include "urysohn/checks.hpp"
#include "urysohn/errors.hpp"

#include <doctest.h>

using namespace urysohn;
using oracle::q;

TEST_CASE("gamma and delta") {
  CHECK(gamma(q(0), q(1, 3), q(1)) == q(1, 3));
  CHECK(delta(q(0), q(1, 3), q(1)) == q(2, 3));
  CHECK(gamma(q(0), q(0), q(1)) == q(1, 2));
  CHECK(delta(q(0), q(0), q(1)) == q(1, 2));
  CHECK(gamma(q(0), q(1), q(1)) == 0);
  CHECK(delta(q(0), q(1), q(1)) == 1);
  CHECK_THROWS_AS(gamma(q(1), q(1, 2), q(1)), ParameterError);
  CHECK_THROWS_AS(delta(q(0), q(2), q(1)), ParameterError);
}

TEST_CASE("remove_middle") {
  CHECK(remove_middle(q(0), q(1, 3), q(1)) == RSet({{q(0), q(1, 3)}, {q(2, 3), q(1)}}));
  CHECK(remove_middle(q(0), q(0), q(1)) == RSet::interval(q(0), q(1)));
  CHECK(remove_middle(q(0), q(1, 2), q(1)) == RSet({{q(0), q(1, 4)}, {q(3, 4), q(1)}}));
  CHECK(remove_middle(q(0), q(1), q(1)) == RSet::points({q(0), q(1)}));
}

TEST_CASE("cantor sets") {
  CHECK(cantor_set(WeightVector{}) == RSet::interval(q(0), q(1)));
  CHECK(cantor_set(WeightVector({q(1, 3), q(1, 3)})) ==
        RSet({{q(0), q(1, 9)}, {q(2, 9), q(1, 3)}, {q(2, 3), q(7, 9)}, {q(8, 9), q(1)}}));
  CHECK(cantor_set(WeightVector({q(1, 2)})) == RSet({{q(0), q(1, 4)}, {q(3, 4), q(1)}}));
  CHECK(cantor_set(WeightVector({q(2, 5), q(1, 2)})).interval_count() == 4);
  CHECK(cantor_set(WeightVector({q(1, 2)}), q(2), q(6)) == RSet({{q(2), q(3)}, {q(5), q(6)}}));
  CHECK_THROWS_AS(WeightVector({q(0)}), ParameterError);
  CHECK_THROWS_AS(WeightVector({q(1)}), ParameterError);
}

TEST_CASE("cantor set shape") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> w;
    const std::size_t k = 1 + rng() % 5;
    for (std::size_t i = 0; i < k; ++i) w.push_back(q(1 + static_cast<long long>(rng() % 9), 10));
    const RSet c = cantor_set(WeightVector(w));
    REQUIRE(c.interval_count() == (std::size_t{1} << k));
    // Each round keeps two pieces of relative length (1 - w) / 2.
    Rational piece = 1, total = 1;
    for (const auto& x : w) {
      piece *= (1 - x) / 2;
      total *= 1 - x;
    }
    Rational measure = 0;
    for (const auto& iv : c.intervals()) {
      CHECK(iv.hi - iv.lo == piece);
      measure += iv.hi - iv.lo;
    }
    CHECK(measure == total);
    CHECK(c.min() == 0);
    CHECK(c.max() == 1);
  }
}

TEST_CASE("weights above one third keep oplus associative") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> w;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) w.push_back(q(1, 3) + q(1 + static_cast<long long>(rng() % 15), 24));
    CHECK(check_associativity(cantor_set(WeightVector(w)), 0, 1).passed());
  }
  CHECK(check_associativity(cantor_set(WeightVector({q(1, 3), q(1, 3)})), 0, 1).failed());
}
