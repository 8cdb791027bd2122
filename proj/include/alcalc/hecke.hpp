#pragma once

#include <map>

#include "alcalc/alcove.hpp"
#include "alcalc/laurent.hpp"

namespace alcalc {

/// Element of the affine Hecke algebra in the standard basis {H_x}.  Basis
/// elements are keyed by alcoves through the fixed bijection x -> A_fund . x,
/// so no abstract Coxeter normal form is needed: reduced words are recovered
/// by gallery descent.
struct HeckeElt {
  std::map<Alcove, LaurentPoly> c;

  bool operator==(const HeckeElt& o) const { return c == o.c; }
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  HeckeElt scaled(const LaurentPoly& f) const;
  bool is_zero() const { return c.empty(); }
};

/// Element of the periodic module P = free Z[v,v^-1]-module on all alcoves.
struct PeriodicElt {
  std::map<Alcove, LaurentPoly> c;

  bool operator==(const PeriodicElt& o) const { return c == o.c; }
  PeriodicElt& operator+=(const PeriodicElt& o);
  PeriodicElt& operator-=(const PeriodicElt& o);
  friend PeriodicElt operator+(PeriodicElt a, const PeriodicElt& b) { return a += b; }
  friend PeriodicElt operator-(PeriodicElt a, const PeriodicElt& b) { return a -= b; }
  PeriodicElt scaled(const LaurentPoly& f) const;
  bool is_zero() const { return c.empty(); }
};

/// The identity H_e.
HeckeElt hecke_one();
/// The standard basis element H_x for the element with A_fund . x = a.
HeckeElt hecke_basis(const Alcove& a);
/// H_s for a wall type of the fundamental alcove.
HeckeElt hecke_gen(const RootDatum& d, int face);

/// Product in the standard basis.  Bilinear over H_w H_s = H_{ws} when
/// ws > w and H_{ws} + (v^-1 - v) H_w otherwise; general right factors are
/// expanded along a reduced gallery word.
HeckeElt hecke_mul(const RootDatum& d, const HeckeElt& a, const HeckeElt& b);

/// (H_{s_1} + v) ... (H_{s_l} + v) for a word of wall types.
HeckeElt bs_char_element(const RootDatum& d, const std::vector<int>& word);

/// Right action of H on P: A . H_s = As if As > A (generic order), and
/// As + (v^-1 - v) A if As < A; extended along reduced words.
PeriodicElt periodic_act(const RootDatum& d, const PeriodicElt& p, const HeckeElt& h);

/// e_lambda = sum over the orbit W'_lambda A_lambda^- of v^{-ell(A)} A.
PeriodicElt e_lambda(const RootDatum& d, const Vec2& lambda);

} // namespace alcalc
