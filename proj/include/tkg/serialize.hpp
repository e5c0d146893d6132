#pragma once

#include <string>

#include <json.hpp>

#include "tkg/genus.hpp"
#include "tkg/oracle.hpp"
#include "tkg/stable.hpp"
#include "tkg/upsilon.hpp"

namespace tkg {

// JSON conventions: objects sort their keys; every rational value is a
// string ("num" or "num/den", never a float), so output is exact and
// byte-stable across runs.

nlohmann::json rational_json(const Rational& r);
nlohmann::json step_json(const StepFunction& f);        // {initial, jumps:[{delta,t}]}
nlohmann::json pl_json(const PiecewiseLinear& f);       // {points:[{t,y}]}
nlohmann::json semigroup_json(const SemigroupSequence& s);
nlohmann::json staircase_json(const Staircase& s);      // {points:[{x,y}]}
nlohmann::json lower_json(const LowerBound& lb);
nlohmann::json upper_json(const UpperBound& ub);
nlohmann::json beta_steps_json(const std::vector<BetaStep>& steps);
nlohmann::json report_json(const BoundReport& r);
nlohmann::json profile_json(const StableProfile& p);
nlohmann::json crossval_json(const CrossValidation& cv);

// CSV emitters; header row first, one record per line, LF endings.
std::string csv_step(const StepFunction& f);      // t,delta
std::string csv_pl(const PiecewiseLinear& f);     // t,y
std::string csv_staircase(const Staircase& s);    // x,y
std::string csv_profile(const StableProfile& p);  // t,sigma_bound,upsilon_bound

// Presentational SVG; polyline vertices sit exactly at the breakpoints.
std::string svg_step(const StepFunction& f);
std::string svg_pl(const PiecewiseLinear& f);
std::string svg_staircase(const Staircase& s);
std::string svg_profile(const StableProfile& p);

}  // namespace tkg
