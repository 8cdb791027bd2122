#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcalc/field.hpp"
#include "alcalc/root_datum.hpp"

namespace alcalc {

/// Monomial exponents in the weight-coordinate variables (slot 1 unused for
/// rank-1 data).  Ordered lexicographically via std::array's operator<.
using Expo = std::array<int, 2>;

/// Multivariate polynomial over an exact field (rationals or F_p) in the
/// weight coordinates of X.  The grading puts every variable in degree 2,
/// so the S-degree of a monomial is twice its total exponent.
///
/// A default-constructed Poly is the zero polynomial over the rationals and
/// adopts the other operand's field when combined, mirroring Fk.
class Poly {
public:
  Poly() = default;

  static Poly zero(long long p);
  static Poly constant(const Fk& c);
  /// The variable x_i.
  static Poly var(int i, long long p);
  /// The linear form  w[0]*x_0 + w[1]*x_1.
  static Poly linear(const Vec2& w, long long p);
  static Poly monomial(const Expo& e, const Fk& c);

  long long characteristic() const { return p_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo{0, 0}); }
  Fk constant_term() const;
  /// Coefficient of the monomial with exponents e (zero if absent).
  Fk coeff(const Expo& e) const;

  /// S-degree of the top monomial (twice the total exponent); -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  /// The homogeneous component of the given S-degree.
  Poly homogeneous_part(int sdeg) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Fk& c) const;

  /// Structural equality on terms (all zeros are equal regardless of field).
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  const std::map<Expo, Fk>& terms() const { return t_; }

  std::string str(const std::vector<std::string>& vars) const;

private:
  void put(const Expo& e, const Fk& c);
  void adopt(const Poly& o);

  long long p_ = 0;
  std::map<Expo, Fk> t_;
};

/// The positive root alpha_i as a linear polynomial.
Poly root_poly(const RootDatum& d, int pos_root, long long p);

/// Action of the finite Weyl group element w (ring automorphism substituting
/// each variable by the linear form of its image weight).
Poly weyl_act(const RootDatum& d, int w, const Poly& f);

/// Division with remainder by the linear form alpha_i: f = q*alpha + r with
/// r free of the pivot variable.  Requires alpha_i nonzero over the field
/// (guaranteed whenever the GKM check passes); throws GkmViolation otherwise.
void divmod_root(const RootDatum& d, int pos_root, const Poly& f, Poly& q, Poly& r);

bool divides_root(const RootDatum& d, int pos_root, const Poly& f);
/// Exact quotient f / alpha_i; throws NotDivisible if alpha_i does not divide f.
Poly divide_exact(const RootDatum& d, int pos_root, const Poly& f);
bool congruent_mod_root(const RootDatum& d, const Poly& f, const Poly& g, int pos_root);

} // namespace alcalc
