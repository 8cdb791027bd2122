#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace alcalc {

/// Integer Laurent polynomial in one variable v.
///
/// Stored as exponent -> coefficient with no zero coefficients retained.
/// Coefficients are int64: every graded rank and character in the engine's
/// range fits with room to spare.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return term(0, 1); }

  /// c * v^e
  static LaurentPoly term(int e, long long c) {
    LaurentPoly f;
    if (c != 0) f.c_[e] = c;
    return f;
  }
  static LaurentPoly v_pow(int e) { return term(e, 1); }

  bool is_zero() const { return c_.empty(); }

  long long coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
  }

  /// Smallest / largest exponent with nonzero coefficient (requires nonzero).
  int min_exp() const { return c_.begin()->first; }
  int max_exp() const { return c_.rbegin()->first; }

  /// Value at v = 1 (total rank).
  long long at_one() const {
    long long s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
  }

  /// All coefficients nonnegative?
  bool nonneg() const {
    for (auto& [e, c] : c_)
      if (c < 0) return false;
    return true;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) add(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) add(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.c_)
      for (auto& [eb, cb] : b.c_) r.add(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Multiply by v^e (grading shift).
  LaurentPoly shifted(int e) const {
    LaurentPoly r;
    for (auto& [k, c] : c_) r.c_[k + e] = c;
    return r;
  }

  LaurentPoly scaled(long long n) const {
    LaurentPoly r;
    if (n != 0)
      for (auto& [k, c] : c_) r.c_[k] = c * n;
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const { return c_ < o.c_; }

  /// Sorted (ascending exponent) [exponent, coefficient] pairs.
  std::vector<std::pair<int, long long>> pairs() const {
    return {c_.begin(), c_.end()};
  }

  /// Human-readable form, descending exponents: "v^2 + 3 - 2*v^-1".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      auto [e, c] = *it;
      bool neg = c < 0;
      long long a = neg ? -c : c;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      if (e == 0) {
        s += std::to_string(a);
      } else {
        if (a != 1) s += std::to_string(a) + "*";
        s += (e == 1) ? "v" : "v^" + std::to_string(e);
      }
    }
    return s;
  }

private:
  void add(int e, long long c) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (c != 0) c_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }

  std::map<int, long long> c_;
};

} // namespace alcalc
