#pragma once

#include <utility>
#include <vector>

#include "tkg/rational.hpp"

namespace tkg {

// Right-continuous integer step function on [0,1].  initial_value holds on
// [0, b_0); values()[i] holds on [b_i, b_{i+1}) and the last value holds
// through t = 1.  Breakpoints are strictly increasing rationals in (0,1]
// and the value genuinely changes at every breakpoint.
class StepFunction {
public:
  StepFunction() = default;  // identically zero

  // Builds from a jump list; jumps at equal t accumulate, zero jumps drop.
  static StepFunction from_jumps(long long initial,
                                 std::vector<std::pair<Rational, long long>> jumps);

  long long initial_value() const { return initial_; }
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<long long>& values() const { return values_; }

  long long evaluate(const Rational& t) const;

  // (t, delta) pairs recovering the function from initial_value.
  std::vector<std::pair<Rational, long long>> jumps() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
  long long initial_ = 0;
  std::vector<Rational> breaks_;
  std::vector<long long> values_;
};

// Integer linear combination sum c_i * f_i.
StepFunction step_combine(const std::vector<std::pair<long long, StepFunction>>& parts);

struct StepMax {
  long long value;   // max over [0,1] of |f(t)|
  Rational witness;  // smallest t attaining it
};
StepMax max_abs_over_t(const StepFunction& f);

}  // namespace tkg
