#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tkg/piecewise_linear.hpp"
#include "tkg/rational.hpp"
#include "tkg/signature.hpp"
#include "tkg/step_function.hpp"
#include "tkg/torus_knot.hpp"

namespace tkg {

// Genus of the canonical fiber surface.
Rational seifert_genus(const TorusKnot& k);                 // (p-1)(q-1)/2
Rational seifert_genus(const TorusCombination& K);          // sum |c_i| g3(K_i)

// How many disjoint copies of guest's fiber surface the host's fiber surface
// is known to contain.  The rule list is closed: only containments with a
// concrete surface construction behind them are admitted.
struct Capacity {
  long long copies = 0;
  std::string rule;  // which containment produced the count
};
Capacity fiber_capacity(const TorusKnot& host, const TorusKnot& guest);

// Candidate guests whose fiber might embed in the host under some rule.
std::vector<TorusKnot> guest_candidates(const TorusKnot& host);

struct LowerBound {
  Rational sigma_half;       // max |sigma_K| / 2
  Rational sigma_witness;
  Rational upsilon_ratio;    // max |Upsilon_K(t)| / t
  Rational upsilon_witness;  // 0 encodes the t -> 0 slope limit
  Rational tau_abs;          // |tau(K)|; never exceeds upsilon_ratio
  Rational value;            // max(sigma_half, upsilon_ratio)
};
LowerBound lower_bound(const TorusCombination& K);

// Slice-pair excision: removing c copies of guest # -guest from the
// canonical surface cuts its genus by 2c g3(guest).
struct ExcisionStep {
  TorusKnot guest;
  std::string host_rule_pos;  // rule giving copies inside the positive side
  std::string host_rule_neg;
  long long copies;           // min(a * cap_pos, b * cap_neg)
  Rational genus_removed;     // 2 * copies * g3(guest)
};

struct UpperBound {
  Rational value;
  Rational canonical_g3;
  std::string method;                    // "canonical" | "excision" | "two-strand-recursion"
  std::optional<ExcisionStep> excision;  // best single-guest excision, if any applied
  std::vector<BetaStep> beta_steps;      // two-strand recursion transcript, if run
  std::optional<Rational> beta_value;    // recursion bound (genus units), if run
};
UpperBound upper_bound(const TorusCombination& K);

struct BoundReport {
  TorusCombination K;
  Rational g3;
  LowerBound lower;
  UpperBound upper;
  bool exact;  // lower.value == upper.value
};
BoundReport g4_exact(const TorusCombination& K);

// Four-genus of aT(2,k) # -bT(2,l) for odd k, l: mu/2, with the enumeration
// cross-checked against the recursion.
long long litherland_g4(const LitherlandParams& P);

// ---- Closed-form family checkers.  Each computes the closed-form expression,
// runs the live engines on the same combination, and throws std::logic_error
// on any disagreement; the returned report carries both sides. ----

struct FamilyPiece {
  std::string label;  // e.g. "7b-3a"
  Rational value;
};

// aT(3,4) # -bT(3,8): g4 = 7b-3a for a < 2b, 3a-5b for a >= 2b, with
// per-invariant pieces (upsilon: 7b-3a / 5b-2a / 3a-7b on [0,2b), [2b,12b/5),
// [12b/5,inf); signature: 6b-3a / 5b-2a / 3a-5b on [0,b), [b,2b), [2b,inf)).
struct Family3438Report {
  long long a, b;
  Rational g4;
  FamilyPiece upsilon_piece;
  FamilyPiece sigma_piece;
  BoundReport engine;
};
Family3438Report family_34_38(long long a, long long b);

// aT(p,qr) # -bT(q,pr) with p < q, r < q/(q-p): g4 = |tau| when a <= b and
// (p/2)|Upsilon(2/p)| when a >= b.
struct FamilyPQRReport {
  long long a, b, p, q, r;
  Rational tau_abs_form;      // |a/2 (p-1)(qr-1) - b/2 (q-1)(pr-1)|
  Rational upsilon_form;      // |a/2 (p-1)(qr-1) - b[(q-1)(pr-1)/2 + (p-q)(r-1)]|
  Rational g4;
  bool via_tau;               // which closed form realizes g4
  BoundReport engine;
};
FamilyPQRReport family_pqr(long long a, long long b, long long p, long long q, long long r);

// Mixed-strand families where g4 = |tau| for a <= b and |Upsilon(1)| for
// a >= b.  case 1: aT(2,10r+1) # -bT(3,6r+1); case 2: aT(2,10r+3) #
// -bT(3,6r+2); case 3: aT(2,10r+1) # -bT(4,4r+1).
struct FamilyUpsilon1Report {
  int case_id;
  long long r, a, b;
  Rational tau_form;
  Rational upsilon1_form;
  Rational g4;
  BoundReport engine;
};
FamilyUpsilon1Report family_upsilon1(int case_id, long long r, long long a, long long b);

// aT(2,13) # -bT(3,4): the exact four-genus is not known in general.  The
// live lower bound must match max(3b-5a, 2b-2a, 6a-2b); the recorded upper
// bound max(3b-4a, 2a+b, 6a-b) is reference data without a construction here.
struct OpenFamilyReport {
  long long a, b;
  Rational lower;
  Rational recorded_upper;
  Rational engine_upper;
  bool resolved;  // lower == min(recorded_upper, engine_upper)
};
OpenFamilyReport open_family_213_34(long long a, long long b);

// Signature lower bound of aT(2,3) # -bT(3,4) in closed form.
long long feller_trefoil(long long a, long long b);

}  // namespace tkg
