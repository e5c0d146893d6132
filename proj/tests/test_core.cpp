#include <doctest.h>

#include <stdexcept>

#include "tkg/piecewise_linear.hpp"
#include "tkg/rational.hpp"
#include "tkg/step_function.hpp"
#include "tkg/torus_knot.hpp"

using namespace tkg;

TEST_CASE("rationals stay in lowest terms with positive denominators") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(3) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse round-trips str and rejects junk") {
  for (const char* s : {"0", "-5", "1/2", "-7/3", "22/7"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse(""), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("-"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("rational floor rounds toward minus infinity") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(6, 3).floor() == 2);
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
  CHECK(min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
  CHECK(max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
}

TEST_CASE("torus knots normalize parameter order and reject degeneracies") {
  CHECK(TorusKnot(4, 3).name() == "T(3,4)");
  CHECK(TorusKnot(3, 4) == TorusKnot(4, 3));
  CHECK(TorusKnot(2, 3) < TorusKnot(2, 5));
  CHECK(TorusKnot(2, 99) < TorusKnot(3, 4));
  CHECK_THROWS_AS(TorusKnot(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(TorusKnot(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(TorusKnot(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(TorusKnot(0, 1), std::invalid_argument);
}

TEST_CASE("combinations merge, sort and drop zero terms") {
  const TorusKnot t34(3, 4), t38(3, 8);
  const TorusCombination K({{2, t38}, {1, t34}, {3, t38}, {0, t34}});
  REQUIRE(K.terms().size() == 2);
  CHECK(K.terms()[0] == std::pair<long long, TorusKnot>{1, t34});
  CHECK(K.terms()[1] == std::pair<long long, TorusKnot>{5, t38});

  CHECK(TorusCombination({{1, t34}, {-1, t34}}).empty());
  CHECK(TorusCombination().empty());
  CHECK(K.scaled(0).empty());
  CHECK(-K == K.scaled(-1));
  CHECK(K + (-K) == TorusCombination());
  CHECK(TorusCombination::single(1, t34) + TorusCombination::single(5, t38) == K);
}

TEST_CASE("step functions accumulate equal jump points and drop cancellations") {
  const Rational h(1, 2);
  const StepFunction f = StepFunction::from_jumps(1, {{h, 2}, {h, -2}, {Rational(1, 4), 2}});
  CHECK(f.breakpoints() == std::vector<Rational>{Rational(1, 4)});
  CHECK(f.values() == std::vector<long long>{3});
  CHECK(f.initial_value() == 1);
  CHECK(f.evaluate(Rational(0)) == 1);
  CHECK(f.evaluate(Rational(1, 5)) == 1);
  CHECK(f.evaluate(Rational(1, 4)) == 3);
  CHECK(f.evaluate(Rational(1)) == 3);
}

TEST_CASE("step functions reject jump locations outside the half-open unit interval") {
  CHECK_THROWS_AS(StepFunction::from_jumps(0, {{Rational(0), 2}}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction::from_jumps(0, {{Rational(3, 2), 2}}), std::invalid_argument);
  CHECK_NOTHROW(StepFunction::from_jumps(0, {{Rational(1), 2}}));
}

TEST_CASE("step functions rebuild exactly from their jump lists") {
  const StepFunction f = StepFunction::from_jumps(
      -1, {{Rational(2, 3), -2}, {Rational(1, 3), 2}, {Rational(1), 4}});
  CHECK(StepFunction::from_jumps(f.initial_value(), f.jumps()) == f);
  const StepFunction sum = step_combine({{2, f}, {-2, f}});
  CHECK(sum == StepFunction());
  CHECK(step_combine({{3, f}}).evaluate(Rational(1, 3)) == 3);
}

TEST_CASE("step maximum reports the smallest witness") {
  const StepFunction f = StepFunction::from_jumps(
      0, {{Rational(1, 4), -4}, {Rational(1, 2), 4}, {Rational(3, 4), 4}});
  const StepMax m = max_abs_over_t(f);
  CHECK(m.value == 4);
  CHECK(m.witness == Rational(1, 4));
}

TEST_CASE("piecewise linear functions merge collinear knots") {
  const PiecewiseLinear f = PiecewiseLinear::from_knots(
      {Rational(0), Rational(1, 2), Rational(1)}, {Rational(0), Rational(1), Rational(2)});
  CHECK(f.segment_count() == 1);
  CHECK(f.initial_slope() == Rational(2));
  CHECK(f.evaluate(Rational(1, 3)) == Rational(2, 3));
  CHECK(f.final_value() == Rational(2));
  CHECK(f.scaled(Rational(-1, 2)).final_value() == Rational(-1));
  CHECK(PiecewiseLinear() == PiecewiseLinear::from_knots({Rational(0), Rational(1)},
                                                         {Rational(0), Rational(0)}));
}

TEST_CASE("envelopes of lines meet at exact rational breakpoints") {
  const std::vector<Line> lines{{Rational(-2), Rational(1)}, {Rational(0), Rational(0)}};
  const PiecewiseLinear lo = lower_envelope(lines);
  CHECK(lo.knots() == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
  CHECK(lo.evaluate(Rational(1, 2)) == Rational(0));
  CHECK(lo.evaluate(Rational(1)) == Rational(-1));
  const PiecewiseLinear hi = upper_envelope(lines);
  CHECK(hi.evaluate(Rational(0)) == Rational(1));
  CHECK(hi.evaluate(Rational(1)) == Rational(0));
  CHECK(hi.evaluate(Rational(1, 2)) == Rational(0));
}

TEST_CASE("pl combinations are exact and linear") {
  const PiecewiseLinear f = PiecewiseLinear::from_knots(
      {Rational(0), Rational(1, 3), Rational(1)}, {Rational(0), Rational(-2), Rational(0)});
  const PiecewiseLinear sum = pl_combine({{Rational(1, 2), f}, {Rational(1, 2), f}});
  CHECK(sum == f);
  CHECK(pl_combine({{Rational(1), f}, {Rational(-1), f}}) == PiecewiseLinear());
}

TEST_CASE("ratio maximum includes the slope limit at zero") {
  // |g(t)|/t is maximized by the initial slope, not at any later knot.
  const PiecewiseLinear g = PiecewiseLinear::from_knots(
      {Rational(0), Rational(1, 2), Rational(1)}, {Rational(0), Rational(-3), Rational(-3)});
  const RatioMax m = max_abs_ratio(g);
  CHECK(m.value == Rational(6));
  CHECK(m.witness == Rational(0));

  // A later knot beats the slope limit when the function keeps falling.
  const PiecewiseLinear h = PiecewiseLinear::from_knots(
      {Rational(0), Rational(1, 2), Rational(1)}, {Rational(0), Rational(-1), Rational(-4)});
  const RatioMax mh = max_abs_ratio(h);
  CHECK(mh.value == Rational(4));
  CHECK(mh.witness == Rational(1));
}
