#include "tkg/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>
#include <vector>

#include "tkg/expr.hpp"

namespace tkg {

using nlohmann::json;

json rational_json(const Rational& r) { return json(r.str()); }

json step_json(const StepFunction& f) {
  json jumps = json::array();
  for (const auto& [t, delta] : f.jumps()) jumps.push_back({{"t", t.str()}, {"delta", delta}});
  return {{"initial", f.initial_value()}, {"jumps", std::move(jumps)}};
}

json pl_json(const PiecewiseLinear& f) {
  json points = json::array();
  for (std::size_t i = 0; i < f.knots().size(); ++i)
    points.push_back({{"t", f.knots()[i].str()}, {"y", f.values()[i].str()}});
  return {{"points", std::move(points)}};
}

json semigroup_json(const SemigroupSequence& s) { return json(s.elements()); }

json staircase_json(const Staircase& s) {
  json points = json::array();
  for (const auto& [x, y] : s.points) points.push_back({{"x", x}, {"y", y.str()}});
  return {{"points", std::move(points)}};
}

json lower_json(const LowerBound& lb) {
  return {{"sigma_half", lb.sigma_half.str()},
          {"sigma_witness", lb.sigma_witness.str()},
          {"upsilon_ratio", lb.upsilon_ratio.str()},
          {"upsilon_witness", lb.upsilon_witness.str()},
          {"tau_abs", lb.tau_abs.str()},
          {"value", lb.value.str()}};
}

json beta_steps_json(const std::vector<BetaStep>& steps) {
  json out = json::array();
  for (const auto& s : steps)
    out.push_back({{"a", s.a},
                   {"k", s.k},
                   {"b", s.b},
                   {"l", s.l},
                   {"quotient", s.q},
                   {"remainder", s.r},
                   {"case", s.case_id},
                   {"add", s.add},
                   {"value", s.value}});
  return out;
}

json upper_json(const UpperBound& ub) {
  json out{{"value", ub.value.str()},
           {"canonical_g3", ub.canonical_g3.str()},
           {"method", ub.method}};
  if (ub.excision) {
    out["excision"] = {{"guest", ub.excision->guest.name()},
                       {"rule_pos", ub.excision->host_rule_pos},
                       {"rule_neg", ub.excision->host_rule_neg},
                       {"copies", ub.excision->copies},
                       {"genus_removed", ub.excision->genus_removed.str()}};
  } else {
    out["excision"] = nullptr;
  }
  out["beta"] = ub.beta_value ? json(ub.beta_value->str()) : json(nullptr);
  out["beta_steps"] = ub.beta_steps.empty() ? json(nullptr) : beta_steps_json(ub.beta_steps);
  return out;
}

json report_json(const BoundReport& r) {
  return {{"expression", print_combination(r.K)},
          {"g3", r.g3.str()},
          {"lower", r.lower.value.str()},
          {"upper", r.upper.value.str()},
          {"exact", r.exact},
          {"lower_detail", lower_json(r.lower)},
          {"upper_detail", upper_json(r.upper)}};
}

json profile_json(const StableProfile& p) {
  json crossings = json::array();
  for (const auto& x : p.crossings) crossings.push_back(x.str());
  return {{"k1", print_combination(p.k1)},
          {"k2", print_combination(p.k2)},
          {"sigma_profile", pl_json(p.sigma_profile)},
          {"upsilon_profile", pl_json(p.upsilon_profile)},
          {"crossings", std::move(crossings)}};
}

json crossval_json(const CrossValidation& cv) {
  json checks = json::array();
  for (const auto& c : cv.checks)
    checks.push_back(
        {{"t", c.t.str()}, {"expected", c.expected}, {"got", c.got}, {"retried", c.retried}});
  return {{"p", cv.p}, {"q", cv.q}, {"ok", cv.ok}, {"checks", std::move(checks)}};
}

std::string csv_step(const StepFunction& f) {
  std::string out = "t,delta\n";
  for (const auto& [t, delta] : f.jumps()) out += t.str() + "," + std::to_string(delta) + "\n";
  return out;
}

std::string csv_pl(const PiecewiseLinear& f) {
  std::string out = "t,y\n";
  for (std::size_t i = 0; i < f.knots().size(); ++i)
    out += f.knots()[i].str() + "," + f.values()[i].str() + "\n";
  return out;
}

std::string csv_staircase(const Staircase& s) {
  std::string out = "x,y\n";
  for (const auto& [x, y] : s.points) out += std::to_string(x) + "," + y.str() + "\n";
  return out;
}

std::string csv_profile(const StableProfile& p) {
  std::set<Rational> grid(p.sigma_profile.knots().begin(), p.sigma_profile.knots().end());
  grid.insert(p.upsilon_profile.knots().begin(), p.upsilon_profile.knots().end());
  grid.insert(p.crossings.begin(), p.crossings.end());
  std::string out = "t,sigma_bound,upsilon_bound\n";
  for (const auto& t : grid)
    out += t.str() + "," + p.sigma_profile.evaluate(t).str() + "," +
           p.upsilon_profile.evaluate(t).str() + "\n";
  return out;
}

namespace {

struct Series {
  std::vector<std::pair<double, double>> pts;
  const char* color;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string svg_document(const std::vector<Series>& series) {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 0;
  for (const auto& s : series)
    for (const auto& [x, y] : s.pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (ymax - ymin < 1e-12) {
    ymin -= 1;
    ymax += 1;
  }
  const double W = 640, H = 460, L = 50, R = 610, T = 20, B = 430;
  const auto sx = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (R - L); };
  const auto sy = [&](double y) { return B - (y - ymin) / (ymax - ymin) * (B - T); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt(W) + " " +
                    fmt(H) + "\">\n";
  out += "  <rect width=\"" + fmt(W) + "\" height=\"" + fmt(H) + "\" fill=\"white\"/>\n";
  if (ymin <= 0 && 0 <= ymax)
    out += "  <line x1=\"" + fmt(L) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" + fmt(R) + "\" y2=\"" +
           fmt(sy(0)) + "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  out += "  <line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(T) + "\" x2=\"" + fmt(sx(0)) +
         "\" y2=\"" + fmt(B) + "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (const auto& s : series) {
    out += "  <polyline fill=\"none\" stroke=\"";
    out += s.color;
    out += "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [x, y] : s.pts) {
      if (!first) out += " ";
      out += fmt(sx(x)) + "," + fmt(sy(y));
      first = false;
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::vector<std::pair<double, double>> step_points(const StepFunction& f) {
  std::vector<std::pair<double, double>> pts;
  double prev = static_cast<double>(f.initial_value());
  pts.emplace_back(0.0, prev);
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    const double t = f.breakpoints()[i].to_double();
    pts.emplace_back(t, prev);
    prev = static_cast<double>(f.values()[i]);
    pts.emplace_back(t, prev);
  }
  pts.emplace_back(1.0, prev);
  return pts;
}

std::vector<std::pair<double, double>> pl_points(const PiecewiseLinear& f) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < f.knots().size(); ++i)
    pts.emplace_back(f.knots()[i].to_double(), f.values()[i].to_double());
  return pts;
}

}  // namespace

std::string svg_step(const StepFunction& f) { return svg_document({{step_points(f), "#1f6fb4"}}); }

std::string svg_staircase(const Staircase& s) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [x, y] : s.points)
    pts.emplace_back(static_cast<double>(x), y.to_double());
  return svg_document({{pts, "#1f6fb4"}});
}

std::string svg_pl(const PiecewiseLinear& f) { return svg_document({{pl_points(f), "#1f6fb4"}}); }

std::string svg_profile(const StableProfile& p) {
  return svg_document(
      {{pl_points(p.sigma_profile), "#222222"}, {pl_points(p.upsilon_profile), "#c62828"}});
}

}  // namespace tkg
