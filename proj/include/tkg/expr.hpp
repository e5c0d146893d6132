#pragma once

#include <string>

#include "tkg/torus_knot.hpp"

namespace tkg {

// Parses combination expressions such as "2*T(3,4) - T(3,8)", "T(2,3)" or
// "0" (the empty combination).  Whitespace is ignored; an optional leading
// sign is allowed.  Throws parse_error with the byte offset on bad input.
TorusCombination parse_combination(const std::string& text);

// Canonical text form: terms in sorted order, unit coefficients omitted,
// "0" for the empty combination.  parse_combination round-trips it.
std::string print_combination(const TorusCombination& K);

}  // namespace tkg
