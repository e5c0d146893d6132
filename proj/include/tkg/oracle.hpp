#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tkg/rational.hpp"

namespace tkg {

// Seifert matrix of the fiber surface of T(p,q), from the positive braid
// word (g1 g2 ... g_{p-1})^q.  Basis: one curve per consecutive pair of
// occurrences of the same braid letter, (p-1)(q-1) in total.
struct SeifertMatrix {
  long long p, q;
  Eigen::MatrixXi V;
};

// Construction checks det(V - V^T) = +-1 before returning.
SeifertMatrix seifert_from_braid(long long p, long long q);

// Exact integer determinant by fraction-free elimination.
mpz_class integer_determinant(const Eigen::MatrixXi& M);

// Sign count (#positive - #negative) of the eigenvalues of the Hermitian
// form (1-w)V + (1-conj(w))V^T at w = exp(i*pi*t).  Floating point is
// confined to this function; it throws near_singular_error instead of
// guessing whenever an eigenvalue magnitude falls below `precision`.
long long numeric_signature(const SeifertMatrix& m, const Rational& t, double precision = 1e-6);

struct MidpointCheck {
  Rational t;
  long long expected;  // jump-rule step function value
  long long got;       // eigenvalue sign count
  bool retried;        // near-singular read forced a perturbed retry
};

struct CrossValidation {
  long long p, q;
  std::vector<MidpointCheck> checks;
  bool ok;
};

// Compares the numeric signature with the jump-rule step function at the
// midpoints of the plateaus between consecutive jumps (fence posts at 0 and
// 1).  samples <= 0 checks every plateau, otherwise an evenly spread subset
// of that many.  A disagreement means the braid sign convention and the jump
// rule have diverged, so it throws std::logic_error rather than reporting.
CrossValidation cross_validate(long long p, long long q, long long samples = 0);

// Every coprime pair 2 <= p < q <= qmax, all plateaus.
std::vector<CrossValidation> cross_validate_upto(long long qmax);

}  // namespace tkg
