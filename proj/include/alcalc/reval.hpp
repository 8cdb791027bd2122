#pragma once

#include "alcalc/alcove.hpp"
#include "alcalc/poly.hpp"

namespace alcalc {

/// Element of the periodic coordinate ring R: the symmetric algebra on the
/// lattice of equivariant weight-valued functions on alcoves.  Such a
/// function is determined by its value on any one translation orbit, so we
/// store the polynomial of values on the fundamental orbit; evaluation at an
/// alcove A twists by the finite part of A's normal form (w, mu), which
/// depends only on the orbit A + ZDelta.
struct REval {
  Poly base;

  bool operator==(const REval& o) const { return base == o.base; }
  bool operator!=(const REval& o) const { return !(*this == o); }

  REval operator-() const { return {-base}; }
  friend REval operator+(const REval& a, const REval& b) { return {a.base + b.base}; }
  friend REval operator-(const REval& a, const REval& b) { return {a.base - b.base}; }
  friend REval operator*(const REval& a, const REval& b) { return {a.base * b.base}; }
};

REval reval_const(const Fk& c);
/// The degree-2 element whose value on the fundamental orbit is nu.
REval reval_of_weight(const Vec2& nu, long long p);
/// The element whose value on the orbit of A is nu.
REval reval_of_weight_at(const RootDatum& d, const Vec2& nu, const Alcove& a, long long p);

/// Evaluation f -> f_A, an algebra map onto the polynomial ring; constant on
/// each orbit A + ZDelta and intertwining both actions (tested properties).
Poly eval_at(const RootDatum& d, const REval& f, const Alcove& a);

/// Right action of the affine Weyl group: (x(f))_A = f_{Ax}.
REval reval_act(const RootDatum& d, const AffineElt& x, const REval& f);
/// Action of the wall type s (the reflection in the face's root).
REval face_act(const RootDatum& d, int face, const REval& f);

/// The weight-valued element attached to the wall type s, normalized so
/// that its value on the fundamental orbit is the face's positive root;
/// on other orbits the value is a positive root up to sign.
REval alpha_s(const RootDatum& d, int face, long long p);
/// The matching covector on the fundamental orbit.
Vec2 alpha_s_covec(const RootDatum& d, int face);
/// A degree-2 element pairing to 1 with alpha_s_covec.  The canonical choice
/// is the first weight-basis vector with pairing 1 when one exists, else the
/// Bezout combination; `alternative` adds a kernel vector of the covector
/// when the rank allows one (downstream constructions must not depend on
/// the choice).
REval delta_s(const RootDatum& d, int face, long long p, bool alternative = false);
/// The weight of delta_s on the fundamental orbit.
Vec2 delta_s_weight(const RootDatum& d, int face, bool alternative = false);

} // namespace alcalc
