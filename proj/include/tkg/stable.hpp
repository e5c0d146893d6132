#pragma once

#include <vector>

#include "tkg/piecewise_linear.hpp"
#include "tkg/torus_knot.hpp"

namespace tkg {

// Lower-bound profiles for the stable four-genus of the mixture
// x*K1 # -(1-x)*K2, as exact functions of the mixing parameter x in [0,1].
// Scaled back by (a+b) at x = a/(a+b) they reproduce the whole-knot lower
// bounds of a*K1 # -b*K2.
struct StableProfile {
  TorusCombination k1, k2;
  PiecewiseLinear sigma_profile;    // max_s |x*sig1(s) - (1-x)*sig2(s)| / 2
  PiecewiseLinear upsilon_profile;  // sup_s |x*ups1(s) - (1-x)*ups2(s)| / s
  // Interior x where the dominant bound switches sides.  A flat stretch on
  // which the profiles coincide is reported by its left edge.
  std::vector<Rational> crossings;
};

StableProfile stable_profile(const TorusCombination& K1, const TorusCombination& K2);

// Homogeneity of the lower-bound functionals: bound(nK) = n * bound(K).
bool scale_check(const TorusCombination& K, long long n);

}  // namespace tkg
