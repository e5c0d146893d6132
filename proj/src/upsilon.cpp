#include "tkg/upsilon.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "tkg/errors.hpp"

namespace tkg {

SemigroupSequence::SemigroupSequence(std::vector<long long> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty() || elements_.front() != 0)
    throw std::invalid_argument("SemigroupSequence: must start at 0");
  for (std::size_t i = 0; i + 1 < elements_.size(); ++i)
    if (elements_[i] >= elements_[i + 1])
      throw std::invalid_argument("SemigroupSequence: elements must strictly increase");
}

bool SemigroupSequence::subset_of(const SemigroupSequence& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

SemigroupSequence semigroup(long long p, long long q) {
  TorusKnot validated(p, q);
  p = validated.p;
  q = validated.q;
  long long N = (p - 1) * (q - 1);
  std::set<long long> s;
  for (long long a = 0; a * p <= N; ++a)
    for (long long b = 0; a * p + b * q <= N; ++b) s.insert(a * p + b * q);
  internal_check(s.count(N) == 1, "semigroup: truncation bound must be an element");
  return SemigroupSequence(std::vector<long long>(s.begin(), s.end()));
}

std::vector<std::pair<long long, Rational>> staircase_raw(const SemigroupSequence& S) {
  const auto& x = S.elements();
  std::vector<std::pair<long long, Rational>> pts;
  long long cx = 0;
  Rational cy(S.truncation(), 2);
  pts.emplace_back(cx, cy);
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    ++cx;
    pts.emplace_back(cx, cy);                    // odd index
    cy -= Rational(x[k + 1] - x[k] - 1);
    pts.emplace_back(cx, cy);                    // even index
  }
  return pts;
}

Staircase staircase(const SemigroupSequence& S) {
  Staircase out;
  for (auto& pt : staircase_raw(S))
    if (out.points.empty() || out.points.back() != pt) out.points.push_back(pt);
  return out;
}

namespace {

std::vector<Line> even_vertex_lines(const SemigroupSequence& S) {
  auto pts = staircase_raw(S);
  std::vector<Line> lines;
  for (std::size_t i = 0; i < pts.size(); i += 2) {
    Rational x(pts[i].first);
    const Rational& y = pts[i].second;
    lines.push_back(Line{(y - x) / 2, x});  // (1 - t/2)x + (t/2)y
  }
  return lines;
}

}  // namespace

Rational u_s(const SemigroupSequence& S, const Rational& t) {
  auto pts = staircase_raw(S);
  Rational best;
  bool have = false;
  for (std::size_t i = 0; i < pts.size(); i += 2) {
    Rational v = (Rational(1) - t / 2) * Rational(pts[i].first) + (t / 2) * pts[i].second;
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  return best;
}

PiecewiseLinear u_envelope(const SemigroupSequence& S) {
  return lower_envelope(even_vertex_lines(S));
}

PiecewiseLinear upsilon_torus(long long p, long long q) {
  static std::map<std::pair<long long, long long>, PiecewiseLinear> memo;
  static std::mutex mu;
  if (p > q) std::swap(p, q);
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find({p, q});
  if (it != memo.end()) return it->second;
  PiecewiseLinear ups = u_envelope(semigroup(p, q)).scaled(Rational(-2));
  memo.emplace(std::pair{p, q}, ups);
  return ups;
}

UpsilonSegments initial_segments(long long p, long long q) {
  TorusKnot validated(p, q);
  p = validated.p;
  q = validated.q;
  long long k = q / p, d = q % p;
  internal_check(d > 0, "initial_segments: coprime inputs cannot have p | q");
  UpsilonSegments seg;
  seg.t1 = Rational(2, p);
  seg.t2_raw = (2 * d <= p) ? Rational(4, p) : Rational(2, d);
  seg.t2 = min(seg.t2_raw, Rational(1));
  Rational g2((p - 1) * (q - 1), 2);
  seg.slope1 = -g2;
  seg.slope2 = -(g2 - Rational(k * p));
  seg.intercept2 = Rational(-2 * k);
  return seg;
}

Rational tau(const TorusKnot& k) { return Rational((k.p - 1) * (k.q - 1), 2); }

Rational tau(const TorusCombination& K) {
  Rational t(0);
  for (const auto& [c, k] : K.terms()) t += Rational(c) * tau(k);
  return t;
}

PiecewiseLinear upsilon_combination(const TorusCombination& K) {
  std::vector<std::pair<Rational, PiecewiseLinear>> parts;
  for (const auto& [c, k] : K.terms()) parts.emplace_back(Rational(c), upsilon_torus(k.p, k.q));
  return pl_combine(parts);
}

bool subsequence_monotonicity_check(const SemigroupSequence& s1, const SemigroupSequence& s2) {
  if (s2.truncation() != s1.truncation())
    throw std::invalid_argument("subsequence_monotonicity_check: truncation bounds differ");
  if (!s2.subset_of(s1))
    throw std::invalid_argument("subsequence_monotonicity_check: second sequence not contained in first");
  PiecewiseLinear u1 = u_envelope(s1), u2 = u_envelope(s2);
  std::vector<Rational> grid = u1.knots();
  grid.insert(grid.end(), u2.knots().begin(), u2.knots().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (const Rational& t : grid)
    if (u1.evaluate(t) < u2.evaluate(t)) return false;
  return true;
}

}  // namespace tkg
