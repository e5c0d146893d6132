#include <doctest.h>

#include <stdexcept>

#include "tkg/expr.hpp"
#include "tkg/genus.hpp"
#include "tkg/stable.hpp"

using namespace tkg;

TEST_CASE("a knot against itself vanishes at the balanced mixture") {
  const TorusCombination K = TorusCombination::single(1, TorusKnot(3, 4));
  const StableProfile prof = stable_profile(K, K);
  CHECK(prof.upsilon_profile.evaluate(Rational(1, 2)) == Rational(0));
  CHECK(prof.sigma_profile.evaluate(Rational(1, 2)) == Rational(0));
  // The endpoints are the single-knot bounds.
  CHECK(prof.upsilon_profile.evaluate(Rational(1)) == Rational(3));
  CHECK(prof.upsilon_profile.evaluate(Rational(0)) == Rational(3));
}

TEST_CASE("profiles rescale to whole-knot bounds at rational mixtures") {
  const TorusCombination K1 = parse_combination("T(3,4)");
  const TorusCombination K2 = parse_combination("T(3,8)");
  const StableProfile prof = stable_profile(K1, K2);
  for (long long a = 1; a <= 6; ++a)
    for (long long b = 1; b <= 6; ++b) {
      const LowerBound lb = lower_bound(K1.scaled(a) + K2.scaled(-b));
      const Rational x(a, a + b);
      CHECK(Rational(a + b) * prof.sigma_profile.evaluate(x) == lb.sigma_half);
      CHECK(Rational(a + b) * prof.upsilon_profile.evaluate(x) == lb.upsilon_ratio);
    }
}

TEST_CASE("the cabling pair crosses exactly once") {
  const StableProfile prof = stable_profile(parse_combination("T(3,4)"),
                                            parse_combination("T(3,8)"));
  REQUIRE(prof.crossings.size() == 1);
  CHECK(prof.crossings.front() == Rational(2, 3));
  CHECK(prof.sigma_profile.evaluate(Rational(2, 3)) == Rational(1, 3));
  CHECK(prof.upsilon_profile.evaluate(Rational(2, 3)) == Rational(1, 3));
}

TEST_CASE("profiles accept composite combinations on both sides") {
  const StableProfile prof = stable_profile(parse_combination("T(3,4)+T(2,5)"),
                                            parse_combination("2*T(2,3)"));
  // Endpoint values are the one-sided lower bounds.
  const LowerBound left = lower_bound(parse_combination("-2*T(2,3)"));
  const LowerBound right = lower_bound(parse_combination("T(3,4)+T(2,5)"));
  CHECK(prof.sigma_profile.evaluate(Rational(0)) == left.sigma_half);
  CHECK(prof.sigma_profile.evaluate(Rational(1)) == right.sigma_half);
  CHECK(prof.upsilon_profile.evaluate(Rational(0)) == left.upsilon_ratio);
  CHECK(prof.upsilon_profile.evaluate(Rational(1)) == right.upsilon_ratio);
}

TEST_CASE("lower-bound functionals are positively homogeneous") {
  CHECK(scale_check(parse_combination("T(3,4)-T(3,8)"), 3));
  CHECK(scale_check(parse_combination("T(5,6)-T(3,11)"), 2));
  CHECK(scale_check(parse_combination("2*T(2,13)-3*T(3,4)"), 4));
  CHECK(scale_check(TorusCombination(), 5));
  CHECK_THROWS_AS(scale_check(parse_combination("T(3,4)"), 0), std::invalid_argument);
}
