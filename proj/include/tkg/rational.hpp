#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tkg {

static_assert(sizeof(long) >= 8, "expects an LP64 target");

// Exact rational scalar.  Always stored in lowest terms with a positive
// denominator (mpq canonical form); all arithmetic is exact.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    v_.canonicalize();
  }
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Accepts "n" or "n/d" with optional leading minus.
  static Rational parse(const std::string& s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  // Greatest integer <= value.
  mpz_class floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return r;
  }

  std::string str() const { return v_.get_str(); }  // "n" or "n/d"
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational Rational::parse(const std::string& s) {
  auto check_int = [&](const std::string& part, std::size_t off) {
    if (part.empty()) throw std::domain_error("Rational: empty numeral in '" + s + "'");
    std::size_t k = (part[0] == '-') ? 1 : 0;
    if (k == part.size()) throw std::domain_error("Rational: bare sign in '" + s + "'");
    for (; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9')
        throw std::domain_error("Rational: bad digit at offset " + std::to_string(off + k) + " in '" + s + "'");
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    check_int(s, 0);
    return Rational(mpz_class(s));
  }
  std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
  check_int(ns, 0);
  check_int(ds, slash + 1);
  return Rational(mpz_class(ns), mpz_class(ds));
}

}  // namespace tkg
