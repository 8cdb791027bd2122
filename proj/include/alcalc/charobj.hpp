#pragma once

#include <map>
#include <utility>
#include <vector>

#include "alcalc/hecke.hpp"

namespace alcalc {

/// Character of a graded object with an alcove decomposition: the graded
/// rank of each stalk, A -> grk(M_{{A}}).  Ranks of honest objects have
/// nonnegative coefficients.  Shifts are explicit: grk(M(n)) = v^n grk(M).
struct CharObj {
  std::map<Alcove, LaurentPoly> grk;

  bool operator==(const CharObj& o) const { return grk == o.grk; }
  bool is_zero() const { return grk.empty(); }
  /// grk of the shifted object M(n).
  CharObj shifted(int n) const;
  CharObj& operator+=(const CharObj& o);
  friend CharObj operator+(CharObj a, const CharObj& b) { return a += b; }
};

/// Character of the orbit object: stalk v^{2 dist(A, A_lambda^-)} on the
/// orbit of the box maximum, zero elsewhere.
CharObj char_Q_lambda(const RootDatum& d, const Vec2& lambda);

/// ch(M) = sum_A v^{ell(A)} grk(M_{{A}}) A, as a periodic element.
PeriodicElt ch_of(const RootDatum& d, const CharObj& c);
/// Inverse of ch_of (divide each coefficient by v^{ell(A)}).
CharObj char_from_ch(const RootDatum& d, const PeriodicElt& p);

/// Stalk recursion for - * B_s: the new rank at A is v^{-1}(c_A + c_{As})
/// when As < A and v(c_A + c_{As}) when As > A.
CharObj star_bs_char(const RootDatum& d, const CharObj& c, int face);

/// Character of Q_lambda * B_{s_1} * ... * B_{s_l} (n).
CharObj bott_samelson_char(const RootDatum& d, const Vec2& lambda,
                           const std::vector<int>& word, int shift = 0);

/// Greedy change of basis: write c as a nonnegative combination of shifted
/// basis characters, repeatedly clearing a minimal support alcove.  The
/// basis entry for A must have unit stalk at A and support above A.
/// Returns (alcove, shift) -> multiplicity.
/// Throws NonTriangularBasis if a minimal support alcove has no basis entry
/// (or a basis entry is not unitriangular), NegativeCoefficient if the
/// expansion leaves the nonnegative cone.
std::map<std::pair<Alcove, int>, long long> triangular_decompose(
    const RootDatum& d, const CharObj& c,
    const std::vector<std::pair<Alcove, CharObj>>& basis);

} // namespace alcalc
