#pragma once

#include <utility>
#include <vector>

#include "tkg/rational.hpp"
#include "tkg/step_function.hpp"
#include "tkg/torus_knot.hpp"

namespace tkg {

// Signed jump data of a torus-knot signature function on (0,1].
struct JumpSet {
  long long p;
  long long q;
  std::vector<std::pair<Rational, long long>> jumps;  // sorted t, nonzero even delta
};

// Greatest integer n with n <= x and n ≡ k (mod 2).
mpz_class floor_mod2(const Rational& x, long long k);

// sigma_k(t) = floor_mod2(k*t, k) + 1 on [0,1); the 2-strand building block
// of the two-knot bound mu (opposite sign from the signature function).
long long sigma_small(long long k, const Rational& t);

// X_k = { i/k : 0 <= i < k, i ≡ k (mod 2) }, the discontinuity locus of sigma_k.
std::vector<Rational> jump_locus_t2(long long k);

// Signature step function of the (2,k) torus knot or link from the closed
// form -(floor_mod2(k*t, k) + 1), extended to t = 1 by its left limit.
StepFunction sig_t2k(long long k);

// Tristram-Levine signature jumps of T(p,q): each lattice pair (i,j),
// 1 <= i < p, 1 <= j < q, s = i/p + j/q, contributes -2 at t = 2(s-1) when
// s lies in (1, 3/2] and +2 at t = 2s when s <= 1/2.
JumpSet sig_jumps(long long p, long long q);

StepFunction sig_torus(long long p, long long q);
StepFunction sig_combination(const TorusCombination& K);

// Parameters of aT(2,k) # -bT(2,l).
struct LitherlandParams {
  long long a, k, b, l;
  LitherlandParams(long long a_, long long k_, long long b_, long long l_);
};

// mu = max over X_k ∪ X_l of |a*sigma_k - b*sigma_l|, by direct enumeration.
long long mu_enumerate(const LitherlandParams& P);

// One level of the mu recursion, writing k = q*l + r:
//   case 1: b <= q*a           -> a(k-1) - b(l-1)
//   case 2: r = 0, b > q*a     -> -a(k-2q+1) + b(l-1)
//   case 3: r != 0, b > q*a    -> mu(b-qa, l, a, r) + q*a
struct BetaStep {
  long long a, k, b, l;
  long long q, r;
  int case_id;     // 1, 2 or 3
  long long add;   // q*a carried out of a case-3 step, else 0
  long long value; // mu at this level
};

// Closed-form evaluation of mu via the recursion; requires that not both of
// k and l are even.  Terminates because the parameter pair shrinks strictly.
long long mu_recursive(const LitherlandParams& P);

// Full recursion transcript; front().value is mu.  Parameters with k < l are
// first flipped to mu(b,l,a,k), which leaves the maximum unchanged.
std::vector<BetaStep> mu_trace(const LitherlandParams& P);

}  // namespace tkg
