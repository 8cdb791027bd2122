#include "alcalc/hecke.hpp"

namespace alcalc {

namespace {

void add_term(std::map<Alcove, LaurentPoly>& m, const Alcove& a, const LaurentPoly& f) {
  if (f.is_zero()) return;
  LaurentPoly& slot = m[a];
  slot += f;
  if (slot.is_zero()) m.erase(a);
}

} // namespace

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (auto& [a, f] : o.c) add_term(c, a, f);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (auto& [a, f] : o.c) add_term(c, a, -f);
  return *this;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& f) const {
  HeckeElt r;
  if (f.is_zero()) return r;
  for (auto& [a, g] : c) add_term(r.c, a, g * f);
  return r;
}

PeriodicElt& PeriodicElt::operator+=(const PeriodicElt& o) {
  for (auto& [a, f] : o.c) add_term(c, a, f);
  return *this;
}

PeriodicElt& PeriodicElt::operator-=(const PeriodicElt& o) {
  for (auto& [a, f] : o.c) add_term(c, a, -f);
  return *this;
}

PeriodicElt PeriodicElt::scaled(const LaurentPoly& f) const {
  PeriodicElt r;
  if (f.is_zero()) return r;
  for (auto& [a, g] : c) add_term(r.c, a, g * f);
  return r;
}

HeckeElt hecke_one() { return hecke_basis(fundamental_alcove); }

HeckeElt hecke_basis(const Alcove& a) {
  HeckeElt h;
  h.c[a] = LaurentPoly::one();
  return h;
}

HeckeElt hecke_gen(const RootDatum& d, int face) {
  return hecke_basis(right_act(d, fundamental_alcove, face));
}

namespace {

/// h . H_s, the base case of the multiplication.
HeckeElt mul_gen(const RootDatum& d, const HeckeElt& h, int face) {
  HeckeElt r;
  for (auto& [a, f] : h.c) {
    Alcove as = right_act(d, a, face);
    // Coxeter length relative to the base alcove decides the case.
    bool up = separation(d, fundamental_alcove, as) > separation(d, fundamental_alcove, a);
    add_term(r.c, as, f);
    if (!up)
      add_term(r.c, a, f * (LaurentPoly::v_pow(-1) - LaurentPoly::v_pow(1)));
  }
  return r;
}

} // namespace

HeckeElt hecke_mul(const RootDatum& d, const HeckeElt& a, const HeckeElt& b) {
  HeckeElt r;
  for (auto& [y, g] : b.c) {
    // H_y = H_{s_1} ... H_{s_l} along a reduced gallery word for y.
    HeckeElt term = a;
    for (int s : word_from(d, fundamental_alcove, y)) term = mul_gen(d, term, s);
    r += term.scaled(g);
  }
  return r;
}

HeckeElt bs_char_element(const RootDatum& d, const std::vector<int>& word) {
  HeckeElt r = hecke_one();
  for (int s : word) {
    HeckeElt hs = hecke_gen(d, s);
    r = hecke_mul(d, r, hs) + r.scaled(LaurentPoly::v_pow(1));
  }
  return r;
}

namespace {

/// p . H_s in the periodic module: the generic order decides the case.
PeriodicElt periodic_gen(const RootDatum& d, const PeriodicElt& p, int face) {
  PeriodicElt r;
  for (auto& [a, f] : p.c) {
    Alcove as = right_act(d, a, face);
    add_term(r.c, as, f);
    if (dist(d, a, as) < 0)
      add_term(r.c, a, f * (LaurentPoly::v_pow(-1) - LaurentPoly::v_pow(1)));
  }
  return r;
}

} // namespace

PeriodicElt periodic_act(const RootDatum& d, const PeriodicElt& p, const HeckeElt& h) {
  PeriodicElt r;
  for (auto& [y, g] : h.c) {
    PeriodicElt term = p;
    for (int s : word_from(d, fundamental_alcove, y)) term = periodic_gen(d, term, s);
    r += term.scaled(g);
  }
  return r;
}

PeriodicElt e_lambda(const RootDatum& d, const Vec2& lambda) {
  PeriodicElt r;
  for (const Alcove& a : wlambda_orbit(d, lambda))
    r.c[a] = LaurentPoly::v_pow(static_cast<int>(-length(d, a)));
  return r;
}

} // namespace alcalc
