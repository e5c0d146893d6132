#include "tkg/signature.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "tkg/errors.hpp"

namespace tkg {

mpz_class floor_mod2(const Rational& x, long long k) {
  mpz_class n = x.floor();
  bool n_even = mpz_even_p(n.get_mpz_t()) != 0;
  bool k_even = (k % 2) == 0;
  return n_even == k_even ? n : n - 1;
}

long long sigma_small(long long k, const Rational& t) {
  if (k < 1) throw std::invalid_argument("sigma_small: k must be positive");
  mpz_class v = floor_mod2(Rational(k) * t, k) + 1;
  internal_check(v.fits_slong_p(), "sigma_small: value out of range");
  return v.get_si();
}

std::vector<Rational> jump_locus_t2(long long k) {
  std::vector<Rational> xs;
  for (long long i = (k % 2 == 0) ? 0 : 1; i < k; i += 2) xs.emplace_back(i, k);
  return xs;
}

StepFunction sig_t2k(long long k) {
  if (k < 1) throw std::invalid_argument("sig_t2k: k must be positive");
  std::vector<std::pair<Rational, long long>> jumps;
  long long initial = 0;
  long long prev = 0;
  bool first = true;
  for (const Rational& t : jump_locus_t2(k)) {
    long long v = -(sigma_small(k, t));
    if (t.is_zero()) {
      initial = v;  // even k: the locus contains 0 and the value there is -1
    } else {
      jumps.emplace_back(t, v - (first ? initial : prev));
    }
    prev = v;
    first = false;
  }
  return StepFunction::from_jumps(initial, std::move(jumps));
}

JumpSet sig_jumps(long long p, long long q) {
  TorusKnot validated(p, q);  // range and coprimality checks
  p = validated.p;
  q = validated.q;
  std::map<Rational, long long> acc;
  const Rational half(1, 2), one(1), three_halves(3, 2);
  for (long long i = 1; i < p; ++i) {
    for (long long j = 1; j < q; ++j) {
      Rational s = Rational(i, p) + Rational(j, q);
      if (one < s && s <= three_halves)
        acc[(s - one) * 2] -= 2;
      else if (s <= half)
        acc[s * 2] += 2;
    }
  }
  JumpSet out{p, q, {}};
  long long total = 0;
  for (const auto& [t, d] : acc) {
    if (d == 0) continue;
    out.jumps.emplace_back(t, d);
    total += d < 0 ? -d : d;
  }
  internal_check(total == (p - 1) * (q - 1), "sig_jumps: jump count mismatch");
  return out;
}

StepFunction sig_torus(long long p, long long q) {
  static std::map<std::pair<long long, long long>, StepFunction> memo;
  static std::mutex mu;
  if (p > q) std::swap(p, q);
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find({p, q});
  if (it != memo.end()) return it->second;
  StepFunction f = StepFunction::from_jumps(0, sig_jumps(p, q).jumps);
  memo.emplace(std::pair{p, q}, f);
  return f;
}

StepFunction sig_combination(const TorusCombination& K) {
  std::vector<std::pair<long long, StepFunction>> parts;
  for (const auto& [c, k] : K.terms()) parts.emplace_back(c, sig_torus(k.p, k.q));
  return step_combine(parts);
}

LitherlandParams::LitherlandParams(long long a_, long long k_, long long b_, long long l_)
    : a(a_), k(k_), b(b_), l(l_) {
  if (a < 1 || b < 1) throw std::invalid_argument("LitherlandParams: coefficients must be positive");
  if (k < 1 || l < 1) throw std::invalid_argument("LitherlandParams: strand parameters must be positive");
}

long long mu_enumerate(const LitherlandParams& P) {
  // All evaluation points have the form i/k or j/l, so everything stays in
  // machine integers: sigma_m(i/n) = floor_mod2(m*i/n, m) + 1.
  auto sigma_at = [](long long m, long long i, long long n) {
    long long fl = (m * i) / n;  // exact floor for nonnegative arguments
    if ((fl - m) % 2 != 0) --fl;
    return fl + 1;
  };
  long long best = 0;
  auto visit = [&](long long i, long long n) {
    long long v = P.a * sigma_at(P.k, i, n) - P.b * sigma_at(P.l, i, n);
    if (v < 0) v = -v;
    if (v > best) best = v;
  };
  for (long long i = (P.k % 2 == 0) ? 0 : 1; i < P.k; i += 2) visit(i, P.k);
  for (long long j = (P.l % 2 == 0) ? 0 : 1; j < P.l; j += 2) visit(j, P.l);
  return best;
}

std::vector<BetaStep> mu_trace(const LitherlandParams& P) {
  if (P.k % 2 == 0 && P.l % 2 == 0)
    throw std::invalid_argument("mu_trace: k and l must not both be even");
  long long a = P.a, k = P.k, b = P.b, l = P.l;
  if (k < l) {
    std::swap(a, b);
    std::swap(k, l);
  }
  std::vector<BetaStep> steps;
  while (true) {
    internal_check(k >= l, "mu recursion: parameter order violated");
    long long q = k / l, r = k % l;
    BetaStep s{a, k, b, l, q, r, 0, 0, 0};
    if (b <= q * a) {
      s.case_id = 1;
      s.value = a * (k - 1) - b * (l - 1);
      steps.push_back(s);
      break;
    }
    if (r == 0) {
      s.case_id = 2;
      s.value = -a * (k - 2 * q + 1) + b * (l - 1);
      steps.push_back(s);
      break;
    }
    s.case_id = 3;
    s.add = q * a;
    steps.push_back(s);
    long long na = b - q * a, nb = a;
    internal_check(l < k, "mu recursion: parameters must shrink");
    a = na;
    b = nb;
    k = l;
    l = r;
  }
  // Fold the case-3 offsets back down the chain.
  for (std::size_t i = steps.size(); i-- > 0;) {
    if (steps[i].case_id == 3) steps[i].value = steps[i + 1].value + steps[i].add;
  }
  return steps;
}

long long mu_recursive(const LitherlandParams& P) { return mu_trace(P).front().value; }

}  // namespace tkg
