#include "alcalc/reval.hpp"

#include <cassert>
#include <stdexcept>

namespace alcalc {

REval reval_const(const Fk& c) { return {Poly::constant(c)}; }

REval reval_of_weight(const Vec2& nu, long long p) { return {Poly::linear(nu, p)}; }

REval reval_of_weight_at(const RootDatum& d, const Vec2& nu, const Alcove& a, long long p) {
  // Value at the fundamental orbit is w^-1(nu) when a has finite part w.
  return {Poly::linear(d.act(d.w_inv(a.w), nu), p)};
}

Poly eval_at(const RootDatum& d, const REval& f, const Alcove& a) {
  return weyl_act(d, a.w, f.base);
}

REval reval_act(const RootDatum& d, const AffineElt& x, const REval& f) {
  return {weyl_act(d, x.w, f.base)};
}

REval face_act(const RootDatum& d, int face, const REval& f) {
  return {weyl_act(d, d.reflection(d.faces()[face].root), f.base)};
}

REval alpha_s(const RootDatum& d, int face, long long p) {
  return {root_poly(d, d.faces()[face].root, p)};
}

Vec2 alpha_s_covec(const RootDatum& d, int face) {
  return d.alpha(d.faces()[face].root).covec;
}

Vec2 delta_s_weight(const RootDatum& d, int face, bool alternative) {
  const Root& rt = d.alpha(d.faces()[face].root);
  Vec2 delta{0, 0};
  if (rt.covec[0] == 1) {
    delta = {1, 0};
  } else if (rt.covec[1] == 1) {
    delta = {0, 1};
  } else {
    // Bezout combination u0*c0 + u1*c1 = 1 (coroots are primitive).
    Coord c0 = rt.covec[0], c1 = rt.covec[1];
    bool found = false;
    for (Coord u0 = -3; u0 <= 3 && !found; ++u0)
      for (Coord u1 = -3; u1 <= 3 && !found; ++u1)
        if (u0 * c0 + u1 * c1 == 1) {
          delta = {u0, u1};
          found = true;
        }
    if (!found) throw std::logic_error("coroot is not primitive");
  }
  if (alternative && d.rank() == 2) {
    // Any two valid choices differ by the kernel of the covector, which is
    // spanned by (-c1, c0) (coroots are primitive).  Rank-1 data have a
    // trivial kernel, so the choice there is unique.
    delta[0] -= rt.covec[1];
    delta[1] += rt.covec[0];
  }
  assert(RootDatum::pair(delta, rt.covec) == 1);
  return delta;
}

REval delta_s(const RootDatum& d, int face, long long p, bool alternative) {
  return {Poly::linear(delta_s_weight(d, face, alternative), p)};
}

} // namespace alcalc
