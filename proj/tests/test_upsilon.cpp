#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "tkg/upsilon.hpp"

using namespace tkg;

TEST_CASE("semigroup sequences are validated and ordered") {
  CHECK(semigroup(3, 5).elements() == std::vector<long long>{0, 3, 5, 6, 8});
  CHECK(semigroup(2, 3).elements() == std::vector<long long>{0, 2});
  CHECK(semigroup(2, 7).elements() == std::vector<long long>{0, 2, 4, 6});
  CHECK_THROWS_AS(SemigroupSequence({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SemigroupSequence({0, 2, 2}), std::invalid_argument);
  CHECK(SemigroupSequence({0, 5, 6, 8}).subset_of(semigroup(3, 5)));
  CHECK(!semigroup(3, 5).subset_of(SemigroupSequence({0, 5, 6, 8})));
}

TEST_CASE("staircases start at (0, N/2) and end at height zero for semigroups") {
  for (long long q = 3; q <= 12; ++q)
    for (long long p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const SemigroupSequence S = semigroup(p, q);
      const long long N = (p - 1) * (q - 1);
      const auto raw = staircase_raw(S);
      REQUIRE(raw.size() == 2 * S.elements().size() - 1);
      CHECK(raw.front() == std::pair<long long, Rational>{0, Rational(N, 2)});
      CHECK(raw.back().second == Rational(0));
      // The gaps below N account for exactly half the interval.
      CHECK(raw.back().first == static_cast<long long>(S.elements().size()) - 1);
    }
}

TEST_CASE("the envelope value equals the direct vertex minimum on a grid") {
  for (const auto& [p, q] : std::vector<std::pair<long long, long long>>{
           {2, 3}, {3, 5}, {4, 5}, {3, 11}, {5, 6}, {7, 9}}) {
    const SemigroupSequence S = semigroup(p, q);
    const PiecewiseLinear env = u_envelope(S);
    for (long long i = 0; i <= 24; ++i) {
      const Rational t(i, 24);
      CHECK(env.evaluate(t) == u_s(S, t));
    }
  }
}

TEST_CASE("upsilon of torus knots starts with slope -g3 and is convex") {
  for (const auto& [p, q] : std::vector<std::pair<long long, long long>>{
           {2, 3}, {2, 11}, {3, 4}, {3, 8}, {5, 6}, {4, 9}}) {
    const PiecewiseLinear u = upsilon_torus(p, q);
    CHECK(u.evaluate(Rational(0)) == Rational(0));
    CHECK(u.initial_slope() == -Rational((p - 1) * (q - 1), 2));
    for (std::size_t i = 0; i + 1 < u.segment_count(); ++i)
      CHECK(u.segment_slope(i) < u.segment_slope(i + 1));
  }
}

TEST_CASE("upsilon closed forms for thin examples") {
  // T(2,k): the single line -(k-1)t/2 ... valid through t = 1.
  for (long long k = 3; k <= 15; k += 2) {
    const PiecewiseLinear u = upsilon_torus(2, k);
    CHECK(u.evaluate(Rational(1)) == Rational(-(k - 1), 2));
    CHECK(u.segment_count() == 1);
  }
  // T(3,4): slope -3 down to (2/3, -2), then flat.
  const PiecewiseLinear u34 = upsilon_torus(3, 4);
  CHECK(u34.knots() == std::vector<Rational>{Rational(0), Rational(2, 3), Rational(1)});
  CHECK(u34.evaluate(Rational(2, 3)) == Rational(-2));
  CHECK(u34.final_value() == Rational(-2));
  // T(3,5): slope -4 to (2/3, -8/3), then slope -1 to (1, -3).
  const PiecewiseLinear u35 = upsilon_torus(3, 5);
  CHECK(u35.evaluate(Rational(2, 3)) == Rational(-8, 3));
  CHECK(u35.final_value() == Rational(-3));
}

TEST_CASE("tau is the negated initial slope and is additive") {
  CHECK(tau(TorusKnot(3, 4)) == Rational(3));
  CHECK(tau(TorusKnot(5, 6)) == Rational(10));
  const TorusCombination K({{2, TorusKnot(3, 4)}, {-1, TorusKnot(3, 8)}});
  CHECK(tau(K) == Rational(2 * 3 - 7));
  CHECK(upsilon_combination(K).initial_slope() == -tau(K));
  CHECK(tau(TorusCombination()) == Rational(0));
}

TEST_CASE("the two-segment description holds beyond its guaranteed window") {
  const UpsilonSegments seg = initial_segments(3, 5);
  CHECK(seg.t1 == Rational(2, 3));
  CHECK(seg.slope1 == Rational(-4));
  const PiecewiseLinear u = upsilon_torus(3, 5);
  CHECK(u.evaluate(seg.t1) == seg.slope1 * seg.t1);
  CHECK(u.evaluate(seg.t2) == seg.slope2 * seg.t2 + seg.intercept2);
}

TEST_CASE("subsequence monotonicity rejects incomparable inputs") {
  const SemigroupSequence s1 = semigroup(3, 5);
  CHECK(subsequence_monotonicity_check(s1, SemigroupSequence({0, 3, 6, 8})));
  CHECK_THROWS_AS(subsequence_monotonicity_check(s1, SemigroupSequence({0, 4, 8})),
                  std::invalid_argument);
  CHECK_THROWS_AS(subsequence_monotonicity_check(s1, SemigroupSequence({0, 3, 5, 6, 7})),
                  std::invalid_argument);
}

TEST_CASE("upsilon combinations evaluate term-wise") {
  const PiecewiseLinear u = upsilon_combination(
      TorusCombination({{1, TorusKnot(5, 6)}, {-1, TorusKnot(3, 11)}}));
  const PiecewiseLinear a = upsilon_torus(5, 6), b = upsilon_torus(3, 11);
  for (long long i = 0; i <= 30; ++i) {
    const Rational t(i, 30);
    CHECK(u.evaluate(t) == a.evaluate(t) - b.evaluate(t));
  }
  const RatioMax m = max_abs_ratio(u);
  CHECK(m.value == Rational(2));
  CHECK(m.witness == Rational(2, 3));
}
