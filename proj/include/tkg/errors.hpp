#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tkg {

// Input text could not be parsed; position is a byte offset into the input.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A numeric eigenvalue fell below the zero threshold, so the sign count
// would be a guess.  Callers are expected to retry at a nearby parameter.
class near_singular_error : public std::runtime_error {
public:
  near_singular_error(const std::string& msg, double eigenvalue, double t)
      : std::runtime_error(msg), eigenvalue_(eigenvalue), t_(t) {}
  double eigenvalue() const { return eigenvalue_; }
  double t() const { return t_; }

private:
  double eigenvalue_;
  double t_;
};

// Internal consistency check; failures indicate a bug, not bad input.
inline void internal_check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}
inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw std::logic_error(msg);
}

}  // namespace tkg
