#include "tkg/piecewise_linear.hpp"

#include <algorithm>
#include <stdexcept>

#include "tkg/errors.hpp"

namespace tkg {

PiecewiseLinear::PiecewiseLinear() : ts_{Rational(0), Rational(1)}, ys_{Rational(0), Rational(0)} {}

PiecewiseLinear PiecewiseLinear::from_knots(std::vector<Rational> ts, std::vector<Rational> ys) {
  if (ts.size() != ys.size() || ts.size() < 2)
    throw std::invalid_argument("PiecewiseLinear: need matching knot/value lists of size >= 2");
  if (ts.front() != Rational(0) || ts.back() != Rational(1))
    throw std::invalid_argument("PiecewiseLinear: domain must be exactly [0,1]");
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (!(ts[i] < ts[i + 1]))
      throw std::invalid_argument("PiecewiseLinear: knots must be strictly increasing");

  PiecewiseLinear f;
  f.ts_ = {ts.front()};
  f.ys_ = {ys.front()};
  // Keep an interior knot only where the slope changes.
  for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
    Rational left = (ys[i] - f.ys_.back()) / (ts[i] - f.ts_.back());
    Rational right = (ys[i + 1] - ys[i]) / (ts[i + 1] - ts[i]);
    if (left != right) {
      f.ts_.push_back(ts[i]);
      f.ys_.push_back(ys[i]);
    }
  }
  f.ts_.push_back(ts.back());
  f.ys_.push_back(ys.back());
  return f;
}

Rational PiecewiseLinear::segment_slope(std::size_t i) const {
  return (ys_[i + 1] - ys_[i]) / (ts_[i + 1] - ts_[i]);
}

Rational PiecewiseLinear::evaluate(const Rational& t) const {
  if (t < Rational(0) || t > Rational(1))
    throw std::invalid_argument("PiecewiseLinear: argument outside [0,1]");
  auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - ts_.begin());
  if (i == ts_.size()) return ys_.back();  // t == 1
  --i;
  return ys_[i] + segment_slope(i) * (t - ts_[i]);
}

PiecewiseLinear PiecewiseLinear::scaled(const Rational& c) const {
  auto ys = ys_;
  for (auto& y : ys) y *= c;
  return from_knots(ts_, std::move(ys));
}

PiecewiseLinear lower_envelope(std::vector<Line> lines) {
  if (lines.empty()) throw std::invalid_argument("lower_envelope: empty family");
  // Sort by slope descending so the envelope is built left to right
  // (the minimum is concave: slopes decrease with t).  Among equal slopes
  // only the lowest intercept can appear.
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.slope != b.slope) return b.slope < a.slope;
    return a.intercept < b.intercept;
  });
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const Line& a, const Line& b) { return a.slope == b.slope; }),
              lines.end());

  struct Active {
    Line line;
    Rational start;  // envelope switches to this line at t = start
  };
  std::vector<Active> hull{{lines[0], Rational(0)}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    Rational x(0);
    while (!hull.empty()) {
      // Crossing with the current top; l has the smaller slope, so l is the
      // minimum for t > x.
      x = (hull.back().line.intercept - l.intercept) / (l.slope - hull.back().line.slope);
      if (x <= hull.back().start)
        hull.pop_back();  // the top never gets a nonempty reign
      else
        break;
    }
    if (hull.empty())
      hull.push_back({l, Rational(0)});
    else if (x < Rational(1))
      hull.push_back({l, x});
    // else: l only undercuts beyond the domain
  }

  std::vector<Rational> ts, ys;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (i > 0 && !(hull[i].start > ts.back())) continue;  // defensive; starts increase
    ts.push_back(i == 0 ? Rational(0) : hull[i].start);
    ys.push_back(hull[i].line.at(ts.back()));
  }
  ts.push_back(Rational(1));
  ys.push_back(hull.back().line.at(Rational(1)));
  return PiecewiseLinear::from_knots(std::move(ts), std::move(ys));
}

PiecewiseLinear upper_envelope(std::vector<Line> lines) {
  for (auto& l : lines) {
    l.slope = -l.slope;
    l.intercept = -l.intercept;
  }
  return lower_envelope(std::move(lines)).scaled(Rational(-1));
}

PiecewiseLinear pl_combine(const std::vector<std::pair<Rational, PiecewiseLinear>>& parts) {
  std::vector<Rational> grid;
  for (const auto& [c, f] : parts)
    for (const auto& t : f.knots()) grid.push_back(t);
  grid.push_back(Rational(0));
  grid.push_back(Rational(1));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Rational> ys(grid.size(), Rational(0));
  for (const auto& [c, f] : parts)
    for (std::size_t i = 0; i < grid.size(); ++i) ys[i] += c * f.evaluate(grid[i]);
  return PiecewiseLinear::from_knots(std::move(grid), std::move(ys));
}

RatioMax max_abs_ratio(const PiecewiseLinear& f) {
  if (f.values().front() != Rational(0))
    throw std::invalid_argument("max_abs_ratio: requires f(0) = 0");
  RatioMax best{abs(f.initial_slope()), Rational(0)};
  const auto& ts = f.knots();
  for (std::size_t i = 1; i < ts.size(); ++i) {
    Rational r = abs(f.values()[i]) / ts[i];
    if (r > best.value) best = {r, ts[i]};
  }
  return best;
}

}  // namespace tkg
