#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tkg {

// Positive torus knot T(p,q), stored with 2 <= p < q, gcd(p,q) = 1.
// Constructor arguments may come in either order.
struct TorusKnot {
  long long p;
  long long q;

  TorusKnot(long long p_, long long q_) : p(p_), q(q_) {
    if (p > q) std::swap(p, q);
    if (p < 2) throw std::invalid_argument("TorusKnot: both parameters must be >= 2, got " + name());
    if (p == q || std::gcd(p, q) != 1)
      throw std::invalid_argument("TorusKnot: parameters must be coprime, got " + name());
  }

  std::string name() const { return "T(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

  friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;
};

// Integer linear combination of torus knots in the concordance group:
// sum of c_i * T(p_i, q_i), negative coefficients meaning reversed mirrors.
// Terms are kept sorted by knot with like terms merged and zeros dropped,
// so equal combinations compare equal.
class TorusCombination {
public:
  TorusCombination() = default;

  explicit TorusCombination(std::vector<std::pair<long long, TorusKnot>> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (const auto& [c, k] : raw) {
      if (c == 0) continue;
      if (!terms_.empty() && terms_.back().second == k)
        terms_.back().first += c;
      else
        terms_.emplace_back(c, k);
    }
    std::erase_if(terms_, [](const auto& t) { return t.first == 0; });
  }

  static TorusCombination single(long long c, const TorusKnot& k) {
    return TorusCombination({{c, k}});
  }

  const std::vector<std::pair<long long, TorusKnot>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  TorusCombination scaled(long long n) const {
    auto t = terms_;
    for (auto& [c, k] : t) c *= n;
    return TorusCombination(std::move(t));
  }

  TorusCombination operator-() const { return scaled(-1); }

  friend TorusCombination operator+(const TorusCombination& a, const TorusCombination& b) {
    auto t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return TorusCombination(std::move(t));
  }

  friend bool operator==(const TorusCombination&, const TorusCombination&) = default;

private:
  std::vector<std::pair<long long, TorusKnot>> terms_;
};

}  // namespace tkg
