#include "tkg/genus.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tkg/errors.hpp"
#include "tkg/expr.hpp"
#include "tkg/upsilon.hpp"

namespace tkg {

Rational seifert_genus(const TorusKnot& k) {
  return Rational((k.p - 1) * (k.q - 1), 2);
}

Rational seifert_genus(const TorusCombination& K) {
  Rational g;
  for (const auto& [c, k] : K.terms()) g += Rational(std::llabs(c)) * seifert_genus(k);
  return g;
}

namespace {

std::vector<long long> divisors(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Factorizations host = T(q, p*r) with 2 <= p < q coprime and r(q-p) < q,
// trying both parameter slots as q.  For each one the guest T(p, q*r) rides
// along r parallel strand groups, so a single copy of its fiber sits inside
// the host's fiber.
template <typename Fn>
void each_cross_parameter(const TorusKnot& host, Fn&& fn) {
  const std::array<std::pair<long long, long long>, 2> slots = {
      {{host.p, host.q}, {host.q, host.p}}};
  for (const auto& [q, pr] : slots) {
    for (long long r : divisors(pr)) {
      const long long p = pr / r;
      if (p < 2 || p >= q) continue;
      if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
      if (r * (q - p) >= q) continue;
      fn(p, q, r);
    }
  }
}

}  // namespace

Capacity fiber_capacity(const TorusKnot& host, const TorusKnot& guest) {
  Capacity best;
  const auto offer = [&](long long copies, const char* rule) {
    if (copies > best.copies) best = {copies, rule};
  };
  if (host == guest) offer(1, "identity");
  // T(2,l) fibers stack: floor(k/l) disjoint copies inside the T(2,k) fiber.
  if (host.p == 2 && guest.p == 2 && guest.q <= host.q)
    offer(host.q / guest.q, "two-strand-stack");
  each_cross_parameter(host, [&](long long p, long long q, long long r) {
    if (TorusKnot(p, q * r) == guest) offer(1, "cross-parameter");
  });
  if (host.p == 3 && guest.p == 2 && 3 * guest.q <= 5 * host.q - 1)
    offer(1, "two-strand-in-three-strand");
  if (host == TorusKnot(3, 8) && guest == TorusKnot(3, 4)) offer(2, "t34-in-t38");
  if (host.p == 4 && host.q % 4 == 1 && guest.p == 2 && guest.q == 10 * (host.q / 4) + 1)
    offer(1, "two-strand-in-four-strand");
  return best;
}

std::vector<TorusKnot> guest_candidates(const TorusKnot& host) {
  std::set<TorusKnot> out;
  out.insert(host);
  if (host.p == 2)
    for (long long l = 3; l <= host.q; l += 2) out.insert(TorusKnot(2, l));
  each_cross_parameter(host,
                       [&](long long p, long long q, long long r) { out.insert(TorusKnot(p, q * r)); });
  if (host.p == 3)
    for (long long n = 3; 3 * n <= 5 * host.q - 1; n += 2) out.insert(TorusKnot(2, n));
  if (host == TorusKnot(3, 8)) out.insert(TorusKnot(3, 4));
  if (host.p == 4 && host.q % 4 == 1) out.insert(TorusKnot(2, 10 * (host.q / 4) + 1));
  return {out.begin(), out.end()};
}

LowerBound lower_bound(const TorusCombination& K) {
  LowerBound lb;
  const StepMax sm = max_abs_over_t(sig_combination(K));
  lb.sigma_half = Rational(sm.value, 2);
  lb.sigma_witness = sm.witness;
  const RatioMax rm = max_abs_ratio(upsilon_combination(K));
  lb.upsilon_ratio = rm.value;
  lb.upsilon_witness = rm.witness;
  lb.tau_abs = abs(tau(K));
  internal_check(lb.tau_abs <= lb.upsilon_ratio,
                 "tau bound exceeded the upsilon ratio bound for " + print_combination(K));
  lb.value = max(lb.sigma_half, lb.upsilon_ratio);
  return lb;
}

namespace {

bool better_excision(const ExcisionStep& x, const ExcisionStep& y) {
  if (x.genus_removed != y.genus_removed) return x.genus_removed > y.genus_removed;
  const Rational gx = seifert_genus(x.guest), gy = seifert_genus(y.guest);
  if (gx != gy) return gx > gy;
  return x.guest < y.guest;
}

}  // namespace

UpperBound upper_bound(const TorusCombination& K) {
  UpperBound ub;
  ub.canonical_g3 = seifert_genus(K);
  ub.value = ub.canonical_g3;
  ub.method = "canonical";

  std::vector<std::pair<long long, TorusKnot>> pos, neg;
  for (const auto& [c, k] : K.terms()) (c > 0 ? pos : neg).emplace_back(std::llabs(c), k);
  if (pos.size() != 1 || neg.size() != 1) return ub;
  const long long a = pos.front().first;
  const long long b = neg.front().first;
  const TorusKnot kpos = pos.front().second;
  const TorusKnot kneg = neg.front().second;

  // Best single-guest excision: c parallel copies of guest # -guest removed
  // from the canonical surface leave genus g3(K) - 2c g3(guest).
  std::set<TorusKnot> cand;
  for (const TorusKnot& j : guest_candidates(kpos)) cand.insert(j);
  for (const TorusKnot& j : guest_candidates(kneg)) cand.insert(j);
  std::optional<ExcisionStep> best;
  for (const TorusKnot& j : cand) {
    const Capacity c1 = fiber_capacity(kpos, j);
    const Capacity c2 = fiber_capacity(kneg, j);
    if (c1.copies == 0 || c2.copies == 0) continue;
    const long long copies = std::min(a * c1.copies, b * c2.copies);
    ExcisionStep step{j, c1.rule, c2.rule, copies, Rational(2 * copies) * seifert_genus(j)};
    if (!best || better_excision(step, *best)) best = std::move(step);
  }
  if (best) {
    ub.excision = best;
    const Rational via_excision = ub.canonical_g3 - best->genus_removed;
    if (via_excision < ub.value) {
      ub.value = via_excision;
      ub.method = "excision";
    }
  }

  // Two-strand sides admit the band recursion; take whichever bound is lower.
  if (kpos.p == 2 && kneg.p == 2) {
    ub.beta_steps = mu_trace(LitherlandParams(a, kpos.q, b, kneg.q));
    ub.beta_value = Rational(ub.beta_steps.front().value, 2);
    if (*ub.beta_value < ub.value) {
      ub.value = *ub.beta_value;
      ub.method = "two-strand-recursion";
    }
  }
  return ub;
}

BoundReport g4_exact(const TorusCombination& K) {
  BoundReport r{K, seifert_genus(K), lower_bound(K), upper_bound(K), false};
  internal_check(r.lower.value <= r.upper.value,
                 "four-genus lower bound exceeded the upper bound for " + print_combination(K));
  r.exact = r.lower.value == r.upper.value;
  return r;
}

long long litherland_g4(const LitherlandParams& P) {
  const long long by_enum = mu_enumerate(P);
  const long long by_rec = mu_recursive(P);
  internal_check(by_enum == by_rec, "signature-extremum recursion disagrees with enumeration");
  internal_check(by_enum >= 0 && by_enum % 2 == 0,
                 "signature extremum must be a nonnegative even integer");
  return by_enum / 2;
}

Family3438Report family_34_38(long long a, long long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("family_34_38: need a, b >= 1");
  Family3438Report rep;
  rep.a = a;
  rep.b = b;
  rep.g4 = Rational(a < 2 * b ? 7 * b - 3 * a : 3 * a - 5 * b);
  if (a < 2 * b)
    rep.upsilon_piece = {"7b-3a", Rational(7 * b - 3 * a)};
  else if (5 * a < 12 * b)
    rep.upsilon_piece = {"5b-2a", Rational(5 * b - 2 * a)};
  else
    rep.upsilon_piece = {"3a-7b", Rational(3 * a - 7 * b)};
  if (a < b)
    rep.sigma_piece = {"6b-3a", Rational(6 * b - 3 * a)};
  else if (a < 2 * b)
    rep.sigma_piece = {"5b-2a", Rational(5 * b - 2 * a)};
  else
    rep.sigma_piece = {"3a-5b", Rational(3 * a - 5 * b)};

  rep.engine = g4_exact(TorusCombination({{a, TorusKnot(3, 4)}, {-b, TorusKnot(3, 8)}}));
  if (rep.engine.lower.upsilon_ratio != rep.upsilon_piece.value ||
      rep.engine.lower.sigma_half != rep.sigma_piece.value || rep.engine.upper.value != rep.g4 ||
      !rep.engine.exact)
    throw std::logic_error("family_34_38: engine disagrees with the closed forms at a=" +
                           std::to_string(a) + ", b=" + std::to_string(b));
  return rep;
}

FamilyPQRReport family_pqr(long long a, long long b, long long p, long long q, long long r) {
  if (a < 1 || b < 1) throw std::invalid_argument("family_pqr: need a, b >= 1");
  if (p < 2 || q <= p || std::gcd(p, q) != 1 || r < 1 || r * (q - p) >= q)
    throw std::invalid_argument("family_pqr: need 2 <= p < q coprime and 1 <= r < q/(q-p)");
  FamilyPQRReport rep;
  rep.a = a;
  rep.b = b;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  const Rational g1((p - 1) * (q * r - 1), 2);  // canonical genus of T(p,qr)
  const Rational g2((q - 1) * (p * r - 1), 2);  // canonical genus of T(q,pr)
  rep.tau_abs_form = abs(Rational(a) * g1 - Rational(b) * g2);
  rep.upsilon_form = abs(Rational(a) * g1 - Rational(b) * (g2 + Rational((p - q) * (r - 1))));
  rep.via_tau = rep.tau_abs_form >= rep.upsilon_form;
  rep.g4 = max(rep.tau_abs_form, rep.upsilon_form);

  rep.engine = g4_exact(TorusCombination({{a, TorusKnot(p, q * r)}, {-b, TorusKnot(q, p * r)}}));
  if (rep.engine.lower.value != rep.g4 || rep.engine.upper.value != rep.g4 || !rep.engine.exact)
    throw std::logic_error("family_pqr: engine disagrees with the closed forms at a=" +
                           std::to_string(a) + ", b=" + std::to_string(b) + ", p=" +
                           std::to_string(p) + ", q=" + std::to_string(q) + ", r=" +
                           std::to_string(r));
  return rep;
}

FamilyUpsilon1Report family_upsilon1(int case_id, long long r, long long a, long long b) {
  if (case_id < 1 || case_id > 3) throw std::invalid_argument("family_upsilon1: case must be 1, 2 or 3");
  if (r < 1 || a < 1 || b < 1) throw std::invalid_argument("family_upsilon1: need r, a, b >= 1");
  FamilyUpsilon1Report rep;
  rep.case_id = case_id;
  rep.r = r;
  rep.a = a;
  rep.b = b;
  TorusKnot kpos = case_id == 2 ? TorusKnot(2, 10 * r + 3) : TorusKnot(2, 10 * r + 1);
  TorusKnot kneg = case_id == 1   ? TorusKnot(3, 6 * r + 1)
                   : case_id == 2 ? TorusKnot(3, 6 * r + 2)
                                  : TorusKnot(4, 4 * r + 1);
  if (case_id == 2) {
    rep.tau_form = Rational(a * (5 * r + 1) - b * (6 * r + 1));
    rep.upsilon1_form = Rational(-a * (5 * r + 1) + b * (4 * r + 1));
  } else {
    rep.tau_form = Rational(5 * a * r - 6 * b * r);
    rep.upsilon1_form = Rational(-5 * a * r + 4 * b * r);
  }
  rep.g4 = max(-rep.tau_form, -rep.upsilon1_form);

  rep.engine = g4_exact(TorusCombination({{a, kpos}, {-b, kneg}}));
  if (rep.engine.lower.value != rep.g4 || rep.engine.upper.value != rep.g4 || !rep.engine.exact)
    throw std::logic_error("family_upsilon1: engine disagrees with the closed forms at case=" +
                           std::to_string(case_id) + ", r=" + std::to_string(r) + ", a=" +
                           std::to_string(a) + ", b=" + std::to_string(b));
  return rep;
}

OpenFamilyReport open_family_213_34(long long a, long long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("open_family_213_34: need a, b >= 0");
  OpenFamilyReport rep;
  rep.a = a;
  rep.b = b;
  const TorusCombination K({{a, TorusKnot(2, 13)}, {-b, TorusKnot(3, 4)}});
  rep.lower = lower_bound(K).value;
  const Rational closed =
      max(max(Rational(3 * b - 5 * a), Rational(2 * b - 2 * a)), Rational(6 * a - 2 * b));
  if (rep.lower != closed)
    throw std::logic_error("open_family_213_34: live lower bound left the closed form at a=" +
                           std::to_string(a) + ", b=" + std::to_string(b));
  rep.recorded_upper =
      max(max(Rational(3 * b - 4 * a), Rational(2 * a + b)), Rational(6 * a - b));
  rep.engine_upper = upper_bound(K).value;
  internal_check(rep.lower <= rep.engine_upper, "open_family_213_34: bound order violated");
  rep.resolved = rep.lower == min(rep.recorded_upper, rep.engine_upper);
  return rep;
}

long long feller_trefoil(long long a, long long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("feller_trefoil: need a, b >= 0");
  const long long closed = std::max({3 * b - a, b, a - 2 * b});
  const TorusCombination K({{a, TorusKnot(2, 3)}, {-b, TorusKnot(3, 4)}});
  const StepMax sm = max_abs_over_t(sig_combination(K));
  internal_check(sm.value == 2 * closed,
                 "feller_trefoil: signature extremum left the closed form at a=" +
                     std::to_string(a) + ", b=" + std::to_string(b));
  return closed;
}

}  // namespace tkg
