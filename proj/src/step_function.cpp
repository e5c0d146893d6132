#include "tkg/step_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "tkg/errors.hpp"

namespace tkg {

StepFunction StepFunction::from_jumps(long long initial,
                                      std::vector<std::pair<Rational, long long>> jumps) {
  const auto by_t = [](const auto& a, const auto& b) { return a.first < b.first; };
  if (!std::is_sorted(jumps.begin(), jumps.end(), by_t))
    std::sort(jumps.begin(), jumps.end(), by_t);
  StepFunction f;
  f.initial_ = initial;
  long long running = initial;
  for (std::size_t i = 0; i < jumps.size();) {
    const Rational& t = jumps[i].first;
    if (t <= Rational(0) || t > Rational(1))
      throw std::invalid_argument("StepFunction: jump location outside (0,1]");
    long long delta = 0;
    for (; i < jumps.size() && jumps[i].first == t; ++i) delta += jumps[i].second;
    if (delta == 0) continue;
    running += delta;
    f.breaks_.push_back(t);
    f.values_.push_back(running);
  }
  return f;
}

long long StepFunction::evaluate(const Rational& t) const {
  if (t < Rational(0) || t > Rational(1))
    throw std::invalid_argument("StepFunction: argument outside [0,1]");
  // Last breakpoint <= t wins (right continuity).
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  if (it == breaks_.begin()) return initial_;
  return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

std::vector<std::pair<Rational, long long>> StepFunction::jumps() const {
  std::vector<std::pair<Rational, long long>> out;
  long long prev = initial_;
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    out.emplace_back(breaks_[i], values_[i] - prev);
    prev = values_[i];
  }
  return out;
}

StepFunction step_combine(const std::vector<std::pair<long long, StepFunction>>& parts) {
  std::vector<std::pair<Rational, long long>> merged;
  long long initial = 0;
  for (const auto& [c, f] : parts) {
    initial += c * f.initial_value();
    for (const auto& [t, d] : f.jumps()) merged.emplace_back(t, c * d);
  }
  return StepFunction::from_jumps(initial, std::move(merged));
}

StepMax max_abs_over_t(const StepFunction& f) {
  StepMax best{f.initial_value() < 0 ? -f.initial_value() : f.initial_value(), Rational(0)};
  const auto& bs = f.breakpoints();
  const auto& vs = f.values();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    long long a = vs[i] < 0 ? -vs[i] : vs[i];
    if (a > best.value) best = {a, bs[i]};
  }
  return best;
}

}  // namespace tkg
