#pragma once

#include <string>

#include "tkg/signature.hpp"
#include "tkg/upsilon.hpp"

namespace tkg {

// Everything derived from a single torus knot that is worth keeping.
struct KnotData {
  long long p, q;
  SemigroupSequence semigroup;
  Staircase staircase;
  PiecewiseLinear upsilon;
  StepFunction sig;
};

KnotData compute_knot_data(long long p, long long q);

// With a nonempty cache_dir, one JSON file per (p,q) is read before
// computing and written after; writes go to a temp file and are renamed
// into place so concurrent processes never observe a partial file.
// Unreadable or mismatched files are silently recomputed.
KnotData load_or_compute(long long p, long long q, const std::string& cache_dir);

// Where --cache-dir falls back to: the TKGENUS_CACHE environment variable,
// else empty (no caching).
std::string default_cache_dir();

}  // namespace tkg
