#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tkg/signature.hpp"

using namespace tkg;

TEST_CASE("two-strand signatures match the closed form for all odd k up to 99") {
  for (long long k = 3; k <= 99; k += 2) {
    CHECK(sig_torus(2, k) == sig_t2k(k));
    // Murasugi value at t = 1 and definiteness of the limit.
    CHECK(sig_t2k(k).evaluate(Rational(1)) == -(k - 1));
    CHECK(sig_t2k(k).evaluate(Rational(0)) == 0);
  }
}

TEST_CASE("two-strand discontinuity locus has (k-1)/2 points in (0,1)") {
  for (long long k = 3; k <= 41; k += 2) {
    const auto locus = jump_locus_t2(k);
    const StepFunction f = sig_t2k(k);
    const auto& breaks = f.breakpoints();
    CHECK(breaks.size() == static_cast<std::size_t>((k - 1) / 2));
    // Every signature jump happens at a locus point.
    for (const auto& b : breaks)
      CHECK(std::count(locus.begin(), locus.end(), b) == 1);
  }
}

TEST_CASE("total variation of the torus signature counts every lattice pair") {
  for (long long q = 3; q <= 12; ++q)
    for (long long p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const JumpSet js = sig_jumps(p, q);
      long long total = 0;
      for (const auto& [t, d] : js.jumps) {
        CHECK(d % 2 == 0);
        total += std::llabs(d);
      }
      CHECK(total == (p - 1) * (q - 1));
    }
}

TEST_CASE("signature step functions of sample torus knots take their expected values") {
  const StepFunction s311 = sig_torus(3, 11);
  CHECK(max_abs_over_t(s311).value == 16);
  CHECK(s311.evaluate(Rational(1)) == -16);

  const StepFunction s56 = sig_torus(5, 6);
  CHECK(max_abs_over_t(s56).value == 16);
  CHECK(s56.evaluate(Rational(1)) == -16);

  // T(3,11) has an upward step on the way to t = 1.
  bool rises = false;
  for (const auto& [t, d] : s311.jumps()) rises = rises || d > 0;
  CHECK(rises);
  CHECK(s311.evaluate(Rational(28, 33)) - s311.evaluate(Rational(27, 33)) == 2);

  const StepFunction s23 = sig_torus(2, 3);
  CHECK(s23.evaluate(Rational(1, 10)) == 0);
  CHECK(s23.evaluate(Rational(1, 2)) == -2);
  CHECK(sig_torus(3, 5).evaluate(Rational(99, 100)) == -8);
}

TEST_CASE("combination signatures are term-wise linear") {
  const TorusCombination K({{1, TorusKnot(3, 11)}, {-1, TorusKnot(5, 6)}});
  const StepFunction f = sig_combination(K);
  const StepFunction a = sig_torus(3, 11), b = sig_torus(5, 6);
  for (long long i = 0; i <= 20; ++i) {
    const Rational t(i, 20);
    CHECK(f.evaluate(t) == a.evaluate(t) - b.evaluate(t));
  }
  CHECK(max_abs_over_t(f).value == 4);
  CHECK(sig_combination(TorusCombination()) == StepFunction());
}

TEST_CASE("mu enumeration equals the mu recursion on a dense grid") {
  for (long long k = 3; k <= 15; k += 2)
    for (long long l = 3; l <= 15; l += 2)
      for (long long a = 1; a <= 4; ++a)
        for (long long b = 1; b <= 4; ++b) {
          const LitherlandParams P(a, k, b, l);
          CHECK(mu_enumerate(P) == mu_recursive(P));
        }
}

TEST_CASE("mu traces record which recursion case fired") {
  // k = 5 = 1*3 + 2 against l = 3: with b <= q*a the bound closes immediately.
  const auto trace = mu_trace(LitherlandParams(1, 5, 1, 3));
  REQUIRE(!trace.empty());
  CHECK(trace.front().value == 2);
  CHECK(trace.front().case_id == 1);
  CHECK(mu_recursive(LitherlandParams(1, 5, 1, 3)) == 2);

  // Case 3 recursion carries q*a out of the step.
  const auto deep = mu_trace(LitherlandParams(1, 7, 5, 3));
  REQUIRE(deep.size() >= 2);
  CHECK(deep.front().case_id == 3);
  CHECK(deep.front().value == deep[1].value + deep.front().add);
}

TEST_CASE("mu parameters validate positivity; the recursion rejects even pairs") {
  CHECK_THROWS_AS(LitherlandParams(0, 3, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(LitherlandParams(-1, 3, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(LitherlandParams(1, 0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(mu_trace(LitherlandParams(1, 4, 1, 6)), std::invalid_argument);
  // One even parameter is fine: T(2,even) is a link but sigma_k still makes sense.
  CHECK(mu_enumerate(LitherlandParams(1, 4, 1, 3)) == mu_recursive(LitherlandParams(1, 4, 1, 3)));
}
