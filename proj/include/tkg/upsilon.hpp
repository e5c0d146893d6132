#pragma once

#include <utility>
#include <vector>

#include "tkg/piecewise_linear.hpp"
#include "tkg/rational.hpp"
#include "tkg/torus_knot.hpp"

namespace tkg {

// Strictly increasing sequence 0 = x_0 < x_1 < ... < x_n = N; for a torus
// knot these are the numerical semigroup elements <p,q> truncated at
// N = (p-1)(q-1).
class SemigroupSequence {
public:
  explicit SemigroupSequence(std::vector<long long> elements);

  const std::vector<long long>& elements() const { return elements_; }
  long long truncation() const { return elements_.back(); }  // N
  bool subset_of(const SemigroupSequence& other) const;

  friend bool operator==(const SemigroupSequence&, const SemigroupSequence&) = default;

private:
  std::vector<long long> elements_;
};

SemigroupSequence semigroup(long long p, long long q);

// Corner walk determined by the sequence: A_0 = (0, N/2), odd steps move
// right by one, even steps drop by the gap x_{k+1} - x_k - 1.
struct Staircase {
  std::vector<std::pair<long long, Rational>> points;  // consecutive duplicates removed
};

// All 2n+1 walk vertices, duplicates kept; even indices carry the envelope data.
std::vector<std::pair<long long, Rational>> staircase_raw(const SemigroupSequence& S);
Staircase staircase(const SemigroupSequence& S);

// U_S(t) = min over even-index vertices (x,y) of (1 - t/2)x + (t/2)y.
Rational u_s(const SemigroupSequence& S, const Rational& t);

// The same minimum as an exact piecewise-linear function on [0,1],
// obtained as the lower envelope of the vertex lines x + (y-x)t/2.
PiecewiseLinear u_envelope(const SemigroupSequence& S);

// Upsilon of T(p,q) on [0,1]: -2 * U_{S(p,q)}.  Convex, starts at 0 with
// slope -(p-1)(q-1)/2.
PiecewiseLinear upsilon_torus(long long p, long long q);

// First two segments of upsilon in closed form.  Writing q = kp + d with
// 0 < d < p: the first singularity is t1 = 2/p, the second is 4/p when
// d <= p/2 and 2/d when d >= p/2 (t2 reported both raw and clipped to 1).
struct UpsilonSegments {
  Rational t1;
  Rational t2_raw;
  Rational t2;      // min(t2_raw, 1)
  Rational slope1;  // segment through the origin
  Rational slope2;
  Rational intercept2;
};
UpsilonSegments initial_segments(long long p, long long q);

Rational tau(const TorusKnot& k);    // (p-1)(q-1)/2
Rational tau(const TorusCombination& K);

PiecewiseLinear upsilon_combination(const TorusCombination& K);

// For s2 a subsequence of s1 with the same endpoint, U_{s1} >= U_{s2}
// pointwise; checks the inequality at every envelope breakpoint of either.
bool subsequence_monotonicity_check(const SemigroupSequence& s1, const SemigroupSequence& s2);

}  // namespace tkg
