#pragma once

#include <string>
#include <vector>

#include "alcalc/poly.hpp"

namespace alcalc {

/// Element of the localization of the polynomial ring at the positive roots:
/// a polynomial numerator over a formal denominator monomial
/// prod_alpha alpha^{m_alpha}, m_alpha >= 0.
///
/// Values are kept in canonical form: no positive root divides the numerator
/// while appearing in the denominator.  Since distinct positive roots stay
/// non-proportional over every admitted field and linear forms are prime,
/// the canonical form is unique and equality is structural.
class RootFraction {
public:
  RootFraction() = default; // zero without a datum; adopts on combination

  RootFraction(const RootDatum& d, Poly num);
  RootFraction(const RootDatum& d, Poly num, std::vector<int> den);

  static RootFraction zero(const RootDatum& d, long long p);
  static RootFraction one(const RootDatum& d, long long p);

  const Poly& num() const { return num_; }
  const std::vector<int>& den() const { return den_; }
  long long characteristic() const { return num_.characteristic(); }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the canonical denominator is trivial (the element lies in S).
  bool is_polynomial() const;
  /// True when the denominator omits alpha_i (the element lies in S^alpha).
  bool regular_at(int pos_root) const;
  /// The underlying polynomial; throws NotDivisible when the denominator is
  /// nontrivial.
  Poly as_poly() const;

  /// S-degree (numerator degree minus 2 per denominator root); -1 for zero.
  int degree() const;
  bool is_homogeneous() const { return num_.is_homogeneous(); }

  RootFraction operator-() const;
  RootFraction& operator+=(const RootFraction& o);
  RootFraction& operator-=(const RootFraction& o);
  friend RootFraction operator+(RootFraction a, const RootFraction& b) { return a += b; }
  friend RootFraction operator-(RootFraction a, const RootFraction& b) { return a -= b; }
  friend RootFraction operator*(const RootFraction& a, const RootFraction& b);
  RootFraction scaled(const Fk& c) const;
  /// Multiply by the polynomial g.
  RootFraction times(const Poly& g) const;
  /// Divide by alpha_i^m (m may be negative to multiply instead).
  RootFraction root_shift(int pos_root, int m) const;

  bool operator==(const RootFraction& o) const;
  bool operator!=(const RootFraction& o) const { return !(*this == o); }

  std::string str() const;

private:
  void canonicalize();
  void adopt(const RootFraction& o);

  const RootDatum* d_ = nullptr;
  Poly num_;
  std::vector<int> den_;
};

/// Finite Weyl action, extended from polynomials: permutes the denominator
/// roots by the signed positive-root permutation of w.
RootFraction weyl_act(const RootDatum& d, int w, const RootFraction& f);

} // namespace alcalc
