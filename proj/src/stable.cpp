#include "tkg/stable.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "tkg/genus.hpp"
#include "tkg/signature.hpp"
#include "tkg/upsilon.hpp"

namespace tkg {

namespace {

// x -> |x*u - (1-x)*v| enters the envelope as the line x(u+v) - v and its
// negation.
void push_abs_line(std::vector<Line>& lines, const Rational& u, const Rational& v) {
  lines.push_back({u + v, -v});
  lines.push_back({-(u + v), v});
}

// Interior parameters where f - g changes sign.  Zero runs are compressed
// and reported by their first point.
std::vector<Rational> dominance_switches(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  std::set<Rational> grid(f.knots().begin(), f.knots().end());
  grid.insert(g.knots().begin(), g.knots().end());
  const std::vector<Rational> xs(grid.begin(), grid.end());
  std::vector<Rational> d;
  d.reserve(xs.size());
  for (const auto& x : xs) d.push_back(f.evaluate(x) - g.evaluate(x));

  std::vector<std::pair<Rational, int>> events;  // (x, sign of difference)
  for (std::size_t j = 0; j < xs.size(); ++j) {
    events.emplace_back(xs[j], d[j].sign());
    if (j + 1 < xs.size() && d[j].sign() * d[j + 1].sign() == -1)
      events.emplace_back(xs[j] + d[j] / (d[j] - d[j + 1]) * (xs[j + 1] - xs[j]), 0);
  }

  std::vector<Rational> out;
  int before = 0;
  for (std::size_t i = 0; i < events.size();) {
    if (events[i].second != 0) {
      before = events[i].second;
      ++i;
      continue;
    }
    std::size_t k = i;
    while (k < events.size() && events[k].second == 0) ++k;
    const int after = k < events.size() ? events[k].second : 0;
    if (before != 0 && after != 0 && before != after) out.push_back(events[i].first);
    i = k;
  }
  return out;
}

}  // namespace

StableProfile stable_profile(const TorusCombination& K1, const TorusCombination& K2) {
  StableProfile prof;
  prof.k1 = K1;
  prof.k2 = K2;

  // Signature side: on each piece of the merged breakpoint partition both
  // step functions are constant, so each piece contributes one line.
  const StepFunction s1 = sig_combination(K1);
  const StepFunction s2 = sig_combination(K2);
  std::set<Rational> cuts{Rational(0)};
  cuts.insert(s1.breakpoints().begin(), s1.breakpoints().end());
  cuts.insert(s2.breakpoints().begin(), s2.breakpoints().end());
  std::vector<Line> sig_lines;
  for (const auto& t : cuts)
    push_abs_line(sig_lines, Rational(s1.evaluate(t), 2), Rational(s2.evaluate(t), 2));
  prof.sigma_profile = upper_envelope(std::move(sig_lines));

  // Upsilon side: |x*U1(s) - (1-x)*U2(s)|/s is monotone in s between
  // breakpoints, so the knots, s = 1 and the s -> 0 slope limit suffice.
  const PiecewiseLinear u1 = upsilon_combination(K1);
  const PiecewiseLinear u2 = upsilon_combination(K2);
  std::set<Rational> ss(u1.knots().begin(), u1.knots().end());
  ss.insert(u2.knots().begin(), u2.knots().end());
  ss.erase(Rational(0));
  ss.insert(Rational(1));
  std::vector<Line> ups_lines;
  push_abs_line(ups_lines, u1.initial_slope(), u2.initial_slope());
  for (const auto& s : ss) push_abs_line(ups_lines, u1.evaluate(s) / s, u2.evaluate(s) / s);
  prof.upsilon_profile = upper_envelope(std::move(ups_lines));

  prof.crossings = dominance_switches(prof.sigma_profile, prof.upsilon_profile);
  return prof;
}

bool scale_check(const TorusCombination& K, long long n) {
  if (n < 1) throw std::invalid_argument("scale_check: need n >= 1");
  const LowerBound one = lower_bound(K);
  const LowerBound many = lower_bound(K.scaled(n));
  const Rational c(n);
  return many.sigma_half == c * one.sigma_half && many.upsilon_ratio == c * one.upsilon_ratio &&
         many.tau_abs == c * one.tau_abs && many.value == c * one.value;
}

}  // namespace tkg
