#include "tkg/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "tkg/errors.hpp"

namespace tkg {

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) throw parse_error(std::string("expected ") + what, pos);
    ++pos;
  }
  bool digit_next() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  long long integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected an integer", start);
    if (pos - start > 18) throw parse_error("integer literal too large", start);
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

TorusCombination parse_combination(const std::string& text) {
  Scanner sc{text};
  if (sc.eof()) throw parse_error("empty expression", text.size());

  std::vector<std::pair<long long, TorusKnot>> terms;
  bool first = true;
  for (;;) {
    long long sign = 1;
    if (first) {
      if (sc.accept('-'))
        sign = -1;
      else
        sc.accept('+');
    } else {
      if (sc.eof()) break;
      if (sc.accept('-'))
        sign = -1;
      else if (!sc.accept('+'))
        throw parse_error("expected '+' or '-' between terms", sc.pos);
    }

    long long coeff = 1;
    if (sc.digit_next()) {
      const long long n = sc.integer();
      if (first && n == 0 && sc.eof()) return TorusCombination();  // bare zero
      sc.expect('*', "'*' after the coefficient");
      coeff = n;
    }
    sc.expect('T', "a torus-knot term 'T(p,q)'");
    sc.expect('(', "'('");
    const std::size_t knot_at = sc.pos;
    const long long p = sc.integer();
    sc.expect(',', "','");
    const long long q = sc.integer();
    sc.expect(')', "')'");
    try {
      terms.emplace_back(sign * coeff, TorusKnot(p, q));
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), knot_at);
    }
    first = false;
  }
  return TorusCombination(std::move(terms));
}

std::string print_combination(const TorusCombination& K) {
  if (K.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, k] : K.terms()) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const long long m = std::llabs(c);
    if (m != 1) out += std::to_string(m) + "*";
    out += k.name();
    first = false;
  }
  return out;
}

}  // namespace tkg
