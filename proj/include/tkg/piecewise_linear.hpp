#pragma once

#include <utility>
#include <vector>

#include "tkg/rational.hpp"

namespace tkg {

// Affine function t -> slope*t + intercept.
struct Line {
  Rational slope;
  Rational intercept;
  Rational at(const Rational& t) const { return slope * t + intercept; }
  friend bool operator==(const Line&, const Line&) = default;
};

// Continuous piecewise-linear function on [0,1], stored as knot/value pairs
// with knots()[0] = 0 and knots().back() = 1.  Consecutive segments have
// distinct slopes (collinear knots are merged on construction).
class PiecewiseLinear {
public:
  PiecewiseLinear();  // identically zero

  static PiecewiseLinear from_knots(std::vector<Rational> ts, std::vector<Rational> ys);

  const std::vector<Rational>& knots() const { return ts_; }
  const std::vector<Rational>& values() const { return ys_; }

  Rational evaluate(const Rational& t) const;
  Rational initial_slope() const { return segment_slope(0); }
  Rational final_value() const { return ys_.back(); }
  std::size_t segment_count() const { return ts_.size() - 1; }
  Rational segment_slope(std::size_t i) const;

  PiecewiseLinear scaled(const Rational& c) const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

private:
  std::vector<Rational> ts_;
  std::vector<Rational> ys_;
};

// Pointwise min/max of a nonempty family of lines, restricted to [0,1].
PiecewiseLinear lower_envelope(std::vector<Line> lines);
PiecewiseLinear upper_envelope(std::vector<Line> lines);

// Rational linear combination sum c_i * f_i.
PiecewiseLinear pl_combine(const std::vector<std::pair<Rational, PiecewiseLinear>>& parts);

struct RatioMax {
  Rational value;    // max over (0,1] of |f(t)| / t, including the t->0+ limit
  Rational witness;  // smallest t attaining it; 0 encodes the slope-limit case
};
// Requires f(0) = 0.  The maximum of |f(t)|/t over a segment sits at its
// endpoints, so candidates are the knots, t = 1 and the initial slope.
RatioMax max_abs_ratio(const PiecewiseLinear& f);

}  // namespace tkg
