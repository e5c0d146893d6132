#include "tkg/verify.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "tkg/genus.hpp"
#include "tkg/oracle.hpp"
#include "tkg/signature.hpp"
#include "tkg/stable.hpp"
#include "tkg/upsilon.hpp"

namespace tkg {

namespace {

using Outcome = std::pair<bool, std::string>;

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string at(long long a, long long b) {
  return "a=" + std::to_string(a) + ", b=" + std::to_string(b);
}

Outcome c01_signature_extrema() {
  const StepMax m1 = max_abs_over_t(sig_torus(3, 11));
  const StepMax m2 = max_abs_over_t(sig_torus(5, 6));
  const StepMax m3 = max_abs_over_t(
      sig_combination(TorusCombination({{1, TorusKnot(3, 11)}, {-1, TorusKnot(5, 6)}})));
  const std::string detail = "max|sigma|/2: T(3,11) -> " + Rational(m1.value, 2).str() + " at t=" +
                             m1.witness.str() + "; T(5,6) -> " + Rational(m2.value, 2).str() +
                             " at t=" + m2.witness.str() + "; T(3,11) # -T(5,6) -> " +
                             Rational(m3.value, 2).str() + " at t=" + m3.witness.str();
  if (m1.value != 16 || m2.value != 16 || m3.value != 4) return fail(detail);
  return ok(detail);
}

Outcome c02_upsilon_ratio() {
  const PiecewiseLinear u =
      upsilon_combination(TorusCombination({{1, TorusKnot(5, 6)}, {-1, TorusKnot(3, 11)}}));
  const RatioMax rm = max_abs_ratio(u);
  std::vector<Rational> interior;
  for (std::size_t i = 1; i + 1 < u.knots().size(); ++i) interior.push_back(u.knots()[i]);
  std::string pts;
  for (const auto& t : interior) pts += (pts.empty() ? "" : ", ") + t.str();
  const std::string detail = "max |upsilon(t)|/t = " + rm.value.str() + " at t=" +
                             rm.witness.str() + "; singular points {" + pts + "}";
  const std::vector<Rational> want{Rational(2, 5), Rational(2, 3), Rational(4, 5)};
  if (rm.value != Rational(2) || rm.witness != Rational(2, 3) || interior != want)
    return fail(detail);
  return ok(detail);
}

Outcome c03_two_strand() {
  long long cases = 0;
  for (long long k = 3; k <= 41; k += 2)
    for (long long l = 3; l <= 41; l += 2)
      for (long long a = 1; a <= 12; ++a)
        for (long long b = 1; b <= 12; ++b) {
          const long long g = litherland_g4(LitherlandParams(a, k, b, l));
          const BoundReport rep =
              g4_exact(TorusCombination({{a, TorusKnot(2, k)}, {-b, TorusKnot(2, l)}}));
          if (!rep.exact || rep.lower.value != Rational(g))
            return fail("mismatch at " + at(a, b) + ", k=" + std::to_string(k) + ", l=" +
                        std::to_string(l) + ": recursion gives " + std::to_string(g) +
                        ", engine lower " + rep.lower.value.str() + ", upper " +
                        rep.upper.value.str());
          ++cases;
        }
  return ok(std::to_string(cases) + " parameter tuples certified with matching four-genus");
}

Outcome c04_two_segment_upsilon() {
  long long pairs = 0;
  for (long long q = 3; q <= 40; ++q)
    for (long long p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const UpsilonSegments seg = initial_segments(p, q);
      const PiecewiseLinear u = upsilon_torus(p, q);
      std::set<Rational> pts{Rational(0), seg.t1, seg.t2};
      for (const auto& t : u.knots())
        if (t <= seg.t2) pts.insert(t);
      std::vector<Rational> grid(pts.begin(), pts.end());
      const std::size_t corners = grid.size();
      for (std::size_t i = 0; i + 1 < corners; ++i) grid.push_back((grid[i] + grid[i + 1]) / 2);
      for (const auto& t : grid) {
        const Rational want = t <= seg.t1 ? seg.slope1 * t : seg.slope2 * t + seg.intercept2;
        if (u.evaluate(t) != want)
          return fail("T(" + std::to_string(p) + "," + std::to_string(q) + ") differs at t=" +
                      t.str() + ": envelope " + u.evaluate(t).str() + ", segment form " +
                      want.str());
      }
      ++pairs;
    }
  return ok(std::to_string(pairs) + " coprime pairs agree on [0, t2]");
}

Outcome c05_staircases() {
  const auto mk = [](std::initializer_list<std::pair<long long, long long>> v) {
    std::vector<std::pair<long long, Rational>> out;
    for (const auto& [x, y] : v) out.emplace_back(x, Rational(y));
    return out;
  };
  const SemigroupSequence s1({0, 3, 5, 6, 8});
  const SemigroupSequence s2({0, 5, 6, 8});
  const SemigroupSequence s3({0, 3, 6, 8});
  if (!(semigroup(3, 5) == s1)) return fail("semigroup(3,5) != {0,3,5,6,8}");
  if (staircase(s1).points != mk({{0, 4}, {1, 4}, {1, 2}, {2, 2}, {2, 1}, {3, 1}, {4, 1}, {4, 0}}))
    return fail("staircase of {0,3,5,6,8} differs from the expected corner sequence");
  if (staircase(s2).points != mk({{0, 4}, {1, 4}, {1, 0}, {2, 0}, {3, 0}, {3, -1}}))
    return fail("staircase of {0,5,6,8} differs from the expected corner sequence");
  if (staircase(s3).points != mk({{0, 4}, {1, 4}, {1, 2}, {2, 2}, {2, 0}, {3, 0}, {3, -1}}))
    return fail("staircase of {0,3,6,8} differs from the expected corner sequence");
  if (!subsequence_monotonicity_check(s1, s2) || !subsequence_monotonicity_check(s1, s3))
    return fail("subsequence monotonicity violated");
  return ok("three staircases match after dedup; U_{super} >= U_{sub} on both subsequences");
}

Outcome c06_t34_t38_family() {
  for (long long a = 1; a <= 30; ++a)
    for (long long b = 1; b <= 30; ++b) {
      const Family3438Report rep = family_34_38(a, b);
      const Rational eg4 = max(Rational(7 * b - 3 * a), Rational(3 * a - 5 * b));
      const Rational eups =
          max(max(Rational(7 * b - 3 * a), Rational(5 * b - 2 * a)), Rational(3 * a - 7 * b));
      const Rational esig =
          max(max(Rational(6 * b - 3 * a), Rational(5 * b - 2 * a)), Rational(3 * a - 5 * b));
      if (rep.g4 != eg4 || rep.upsilon_piece.value != eups || rep.sigma_piece.value != esig ||
          !rep.engine.exact)
        return fail("piece mismatch at " + at(a, b));
    }
  return ok("900 (a,b) pairs exact; per-invariant pieces match in every regime");
}

Outcome c07_pqr_family() {
  long long triples = 0, checks = 0;
  for (long long p = 2; p < 60; ++p)
    for (long long q = p + 1; q <= 60; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long long r = 1; q * r <= 60; ++r) {
        if (r * (q - p) >= q) break;
        if (std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
        ++triples;
        for (long long a = 1; a <= 10; ++a)
          for (long long b = 1; b <= 10; ++b) {
            const FamilyPQRReport rep = family_pqr(a, b, p, q, r);
            const std::string where = at(a, b) + ", p=" + std::to_string(p) + ", q=" +
                                      std::to_string(q) + ", r=" + std::to_string(r);
            if (a == b && rep.tau_abs_form != rep.upsilon_form)
              return fail("tau and upsilon forms differ at equal weights, " + where);
            if (a > b && r >= 2 && rep.tau_abs_form >= rep.upsilon_form)
              return fail("expected strict tau < upsilon form, " + where);
            ++checks;
          }
      }
    }
  return ok(std::to_string(triples) + " admissible (p,q,r) triples, " + std::to_string(checks) +
            " certified weight pairs");
}

Outcome c08_mixed_strand_families() {
  long long checks = 0;
  for (int case_id = 1; case_id <= 3; ++case_id)
    for (long long r = 1; r <= 5; ++r)
      for (long long a = 1; a <= 10; ++a)
        for (long long b = 1; b <= 10; ++b) {
          const FamilyUpsilon1Report rep = family_upsilon1(case_id, r, a, b);
          const TorusKnot kpos = case_id == 2 ? TorusKnot(2, 10 * r + 3) : TorusKnot(2, 10 * r + 1);
          const TorusKnot kneg = case_id == 1   ? TorusKnot(3, 6 * r + 1)
                                 : case_id == 2 ? TorusKnot(3, 6 * r + 2)
                                                : TorusKnot(4, 4 * r + 1);
          const TorusCombination K({{a, kpos}, {-b, kneg}});
          const std::string where = "case " + std::to_string(case_id) + ", r=" +
                                    std::to_string(r) + ", " + at(a, b);
          if (tau(K) != rep.tau_form) return fail("tau form mismatch, " + where);
          if (upsilon_combination(K).final_value() != rep.upsilon1_form)
            return fail("upsilon(1) form mismatch, " + where);
          if (!rep.engine.exact || rep.engine.lower.value != rep.g4)
            return fail("engine did not certify the closed form, " + where);
          ++checks;
        }
  return ok(std::to_string(checks) + " family members certified; tau and upsilon(1) forms exact");
}

Outcome c09_open_family() {
  for (long long a = 1; a <= 30; ++a)
    for (long long b = 1; b <= 30; ++b) {
      const OpenFamilyReport rep = open_family_213_34(a, b);
      if (rep.engine_upper < rep.lower) return fail("bound order violated at " + at(a, b));
      if (rep.lower >= rep.recorded_upper)
        return fail("lower bound reached the recorded upper bound at " + at(a, b));
      if (rep.resolved) return fail("exactness wrongly claimed at " + at(a, b));
    }
  return ok("900 pairs: lower matches the piecewise table, uppers stay strictly above");
}

Outcome c10_trefoil_family() {
  for (long long a = 0; a <= 20; ++a)
    for (long long b = 0; b <= 20; ++b) {
      const long long got = feller_trefoil(a, b);
      const long long want = std::max({3 * b - a, b, a - 2 * b});
      if (got != want)
        return fail("closed form differs at " + at(a, b) + ": " + std::to_string(got) + " vs " +
                    std::to_string(want));
    }
  return ok("441 pairs match max{3b-a, b, a-2b}");
}

Outcome c11_oracle() {
  const std::vector<CrossValidation> reports = cross_validate_upto(8);
  long long checks = 0, retried = 0;
  for (const auto& rep : reports) {
    if (!rep.ok)
      return fail("disagreement for T(" + std::to_string(rep.p) + "," + std::to_string(rep.q) +
                  ")");
    checks += static_cast<long long>(rep.checks.size());
    for (const auto& c : rep.checks) retried += c.retried ? 1 : 0;
  }
  return ok(std::to_string(reports.size()) + " knots, " + std::to_string(checks) +
            " plateau midpoints agree (" + std::to_string(retried) + " perturbed retries)");
}

Outcome c12_stable_profiles() {
  struct PairSpec {
    TorusKnot k1, k2;
    bool check_crossing;
  };
  const std::vector<PairSpec> specs{{TorusKnot(3, 4), TorusKnot(3, 8), true},
                                    {TorusKnot(2, 13), TorusKnot(3, 4), false}};
  std::string detail;
  for (const auto& spec : specs) {
    const TorusCombination K1 = TorusCombination::single(1, spec.k1);
    const TorusCombination K2 = TorusCombination::single(1, spec.k2);
    const StableProfile prof = stable_profile(K1, K2);
    for (long long a = 1; a <= 20; ++a)
      for (long long b = 1; b <= 20; ++b) {
        const Rational x(a, a + b);
        const Rational scale(a + b);
        const LowerBound lb = lower_bound(K1.scaled(a) + K2.scaled(-b));
        if (scale * prof.sigma_profile.evaluate(x) != lb.sigma_half ||
            scale * prof.upsilon_profile.evaluate(x) != lb.upsilon_ratio)
          return fail("profile and whole-knot bounds differ for " + spec.k1.name() + " vs " +
                      spec.k2.name() + " at " + at(a, b));
      }
    if (spec.check_crossing) {
      if (prof.crossings != std::vector<Rational>{Rational(2, 3)})
        return fail("expected the single crossing t=2/3 for " + spec.k1.name() + " vs " +
                    spec.k2.name());
      detail = "crossing at t=2/3 with common value " +
               prof.sigma_profile.evaluate(Rational(2, 3)).str() + "; ";
    }
  }
  return ok(detail + "800 mixture weights consistent across both pairs");
}

struct CriterionSpec {
  int id;
  const char* name;
  std::function<Outcome()> body;
};

}  // namespace

std::vector<CriterionResult> run_all_criteria() {
  const std::vector<CriterionSpec> specs{
      {1, "signature extrema for T(3,11), T(5,6) and their difference", c01_signature_extrema},
      {2, "upsilon ratio maximum and singular points for T(5,6) # -T(3,11)", c02_upsilon_ratio},
      {3, "two-strand recursion, enumeration and certified four-genus agree", c03_two_strand},
      {4, "two-segment upsilon description matches the staircase envelope", c04_two_segment_upsilon},
      {5, "semigroup staircase corner sequences and subsequence monotonicity", c05_staircases},
      {6, "exact four-genus closed forms for a*T(3,4) # -b*T(3,8)", c06_t34_t38_family},
      {7, "exact four-genus closed forms for a*T(p,qr) # -b*T(q,pr)", c07_pqr_family},
      {8, "mixed-strand families certified via tau and upsilon(1)", c08_mixed_strand_families},
      {9, "open family a*T(2,13) # -b*T(3,4): bounds bracket, exactness withheld", c09_open_family},
      {10, "trefoil-vs-T(3,4) signature bound closed form", c10_trefoil_family},
      {11, "numeric Seifert-form signatures match the jump rule", c11_oracle},
      {12, "stable-mixture profiles consistent with whole-knot bounds", c12_stable_profiles},
  };
  std::vector<CriterionResult> out;
  for (const auto& spec : specs) {
    try {
      const Outcome o = spec.body();
      out.push_back({spec.id, spec.name, o.first, o.second});
    } catch (const std::exception& e) {
      out.push_back({spec.id, spec.name, false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

}  // namespace tkg
