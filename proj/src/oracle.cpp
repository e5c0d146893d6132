#include "tkg/oracle.hpp"

#include <complex>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tkg/errors.hpp"
#include "tkg/signature.hpp"
#include "tkg/torus_knot.hpp"

namespace tkg {

SeifertMatrix seifert_from_braid(long long p, long long q) {
  TorusKnot k(p, q);  // validates coprimality
  p = k.p;
  q = k.q;
  const long long n = (p - 1) * (q - 1);
  SeifertMatrix m{p, q, Eigen::MatrixXi::Zero(n, n)};

  // Letter i (1-based) occurs at word positions i-1, i-1+(p-1), ...; basis
  // curve (i,s) spans its s-th and (s+1)-th occurrences.
  const auto position = [&](long long i, long long s) { return (i - 1) + (s - 1) * (p - 1); };
  const auto index = [&](long long i, long long s) { return (i - 1) * (q - 1) + (s - 1); };

  for (long long i = 1; i <= p - 1; ++i)
    for (long long s = 1; s <= q - 1; ++s) {
      m.V(index(i, s), index(i, s)) = -1;
      if (s <= q - 2) m.V(index(i, s), index(i, s + 1)) = 1;
    }
  // Curves over adjacent letters link once when their position intervals
  // interleave; the row is taken on the lower letter, the sign by which
  // interval opens first.
  for (long long i = 1; i <= p - 2; ++i)
    for (long long s = 1; s <= q - 1; ++s)
      for (long long u = 1; u <= q - 1; ++u) {
        const long long a1 = position(i, s), a2 = position(i, s + 1);
        const long long b1 = position(i + 1, u), b2 = position(i + 1, u + 1);
        if (a1 < b1 && b1 < a2 && a2 < b2)
          m.V(index(i, s), index(i + 1, u)) = -1;
        else if (b1 < a1 && a1 < b2 && b2 < a2)
          m.V(index(i, s), index(i + 1, u)) = 1;
      }

  const mpz_class det = integer_determinant(m.V - m.V.transpose().eval());
  internal_check(det == 1 || det == -1,
                 "Seifert matrix of " + k.name() + " failed det(V - V^T) = +-1");
  return m;
}

mpz_class integer_determinant(const Eigen::MatrixXi& M) {
  const long long n = M.rows();
  internal_check(n == M.cols() && n > 0, "integer_determinant: need a nonempty square matrix");
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) a[i][j] = M(i, j);

  // Bareiss fraction-free elimination: every division below is exact.
  mpz_class prev = 1;
  int sign = 1;
  for (long long k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      long long pivot = -1;
      for (long long r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (long long i = k + 1; i < n; ++i)
      for (long long j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

long long numeric_signature(const SeifertMatrix& m, const Rational& t, double precision) {
  const long long n = m.V.rows();
  const std::complex<double> w = std::polar(1.0, std::numbers::pi * t.to_double());
  const std::complex<double> cw = 1.0 - std::conj(w);
  const std::complex<double> dw = 1.0 - w;
  Eigen::MatrixXcd H(n, n);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      H(i, j) = dw * static_cast<double>(m.V(i, j)) + cw * static_cast<double>(m.V(j, i));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  long long positive = 0, negative = 0;
  for (long long i = 0; i < n; ++i) {
    const double ev = es.eigenvalues()(i);
    if (std::abs(ev) < precision)
      throw near_singular_error("eigenvalue magnitude below the zero threshold at t = " + t.str(),
                                ev, t.to_double());
    (ev > 0 ? positive : negative)++;
  }
  return positive - negative;
}

CrossValidation cross_validate(long long p, long long q, long long samples) {
  const SeifertMatrix m = seifert_from_braid(p, q);
  const StepFunction sig = sig_torus(m.p, m.q);

  std::vector<Rational> fence{Rational(0)};
  fence.insert(fence.end(), sig.breakpoints().begin(), sig.breakpoints().end());
  if (fence.back() != Rational(1)) fence.push_back(Rational(1));
  const std::size_t plateaus = fence.size() - 1;

  std::vector<std::size_t> chosen;
  if (samples <= 0 || static_cast<std::size_t>(samples) >= plateaus) {
    for (std::size_t i = 0; i < plateaus; ++i) chosen.push_back(i);
  } else {
    for (long long i = 0; i < samples; ++i)
      chosen.push_back(static_cast<std::size_t>(i * static_cast<long long>(plateaus) / samples));
  }

  CrossValidation rep{m.p, m.q, {}, true};
  for (const std::size_t i : chosen) {
    const Rational lo = fence[i], hi = fence[i + 1];
    Rational at = (lo + hi) / 2;
    bool retried = false;
    long long got;
    try {
      got = numeric_signature(m, at);
    } catch (const near_singular_error&) {
      retried = true;
      at = lo + (hi - lo) * Rational(33, 64);
      got = numeric_signature(m, at);
    }
    const long long expected = sig.evaluate(at);
    rep.checks.push_back({at, expected, got, retried});
    if (got != expected) rep.ok = false;
  }
  internal_check(rep.ok, "numeric signature disagreed with the jump rule for " +
                             TorusKnot(p, q).name());
  return rep;
}

std::vector<CrossValidation> cross_validate_upto(long long qmax) {
  std::vector<CrossValidation> out;
  for (long long q = 3; q <= qmax; ++q)
    for (long long p = 2; p < q; ++p)
      if (std::gcd(p, q) == 1) out.push_back(cross_validate(p, q));
  return out;
}

}  // namespace tkg
