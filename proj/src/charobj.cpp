#include "alcalc/charobj.hpp"

#include <set>

#include "alcalc/errors.hpp"

namespace alcalc {

CharObj CharObj::shifted(int n) const {
  CharObj r;
  for (auto& [a, f] : grk) r.grk[a] = f.shifted(n);
  return r;
}

CharObj& CharObj::operator+=(const CharObj& o) {
  for (auto& [a, f] : o.grk) {
    LaurentPoly& slot = grk[a];
    slot += f;
    if (slot.is_zero()) grk.erase(a);
  }
  return *this;
}

CharObj char_Q_lambda(const RootDatum& d, const Vec2& lambda) {
  Alcove amax = box_max(d, lambda);
  CharObj c;
  for (const Alcove& a : wlambda_orbit(d, lambda))
    c.grk[a] = LaurentPoly::v_pow(static_cast<int>(2 * dist(d, a, amax)));
  return c;
}

PeriodicElt ch_of(const RootDatum& d, const CharObj& c) {
  PeriodicElt p;
  for (auto& [a, f] : c.grk) p.c[a] = f.shifted(static_cast<int>(length(d, a)));
  return p;
}

CharObj char_from_ch(const RootDatum& d, const PeriodicElt& p) {
  CharObj c;
  for (auto& [a, f] : p.c) c.grk[a] = f.shifted(static_cast<int>(-length(d, a)));
  return c;
}

CharObj star_bs_char(const RootDatum& d, const CharObj& c, int face) {
  std::set<Alcove> keys;
  for (auto& [a, f] : c.grk) {
    keys.insert(a);
    keys.insert(right_act(d, a, face));
  }
  CharObj r;
  for (const Alcove& a : keys) {
    Alcove as = right_act(d, a, face);
    LaurentPoly sum;
    if (auto it = c.grk.find(a); it != c.grk.end()) sum += it->second;
    if (auto it = c.grk.find(as); it != c.grk.end()) sum += it->second;
    if (sum.is_zero()) continue;
    r.grk[a] = sum.shifted(dist(d, a, as) > 0 ? 1 : -1);
  }
  return r;
}

CharObj bott_samelson_char(const RootDatum& d, const Vec2& lambda,
                           const std::vector<int>& word, int shift) {
  CharObj c = char_Q_lambda(d, lambda);
  for (int s : word) c = star_bs_char(d, c, s);
  return shift == 0 ? c : c.shifted(shift);
}

std::map<std::pair<Alcove, int>, long long> triangular_decompose(
    const RootDatum& d, const CharObj& c,
    const std::vector<std::pair<Alcove, CharObj>>& basis) {
  std::map<Alcove, PeriodicElt> basis_ch;
  for (auto& [a, bc] : basis) {
    // Unitriangularity: unit stalk at the labelling alcove.
    auto it = bc.grk.find(a);
    if (it == bc.grk.end() || !(it->second == LaurentPoly::one()))
      throw NonTriangularBasis("basis character at " + alcove_str(d, a) +
                               " does not have unit stalk there");
    basis_ch.emplace(a, ch_of(d, bc));
  }

  std::map<std::pair<Alcove, int>, long long> out;
  PeriodicElt rest = ch_of(d, c);
  // Each round clears one minimal support alcove; honest triangular bases
  // only ever push support upward, so this terminates.
  size_t guard = 0, guard_max = 10000;
  while (!rest.is_zero()) {
    if (++guard > guard_max)
      throw NonTriangularBasis("expansion does not terminate; basis is not triangular");
    // A minimal alcove of the support (deterministic: smallest key among minima).
    const Alcove* min_a = nullptr;
    for (auto& [a, f] : rest.c) {
      bool minimal = true;
      for (auto& [b, g] : rest.c)
        if (b != a && leq(d, b, a)) { minimal = false; break; }
      if (minimal) { min_a = &a; break; }
    }
    if (!min_a) throw NonTriangularBasis("support has no minimal element");
    Alcove a = *min_a;
    auto bit = basis_ch.find(a);
    if (bit == basis_ch.end())
      throw NonTriangularBasis("no basis character labelled by minimal alcove " +
                               alcove_str(d, a));
    int ell = static_cast<int>(length(d, a));
    LaurentPoly m = rest.c.at(a);
    for (auto [e, coeff] : m.pairs()) {
      if (coeff < 0)
        throw NegativeCoefficient("negative multiplicity at " + alcove_str(d, a));
      int n = e - ell; // coefficient v^e at A means n = e - ell(A) copies of (n)
      out[{a, n}] += coeff;
      rest -= bit->second.scaled(LaurentPoly::term(n, coeff));
    }
    if (rest.c.count(a))
      throw NonTriangularBasis("basis character failed to clear its own alcove");
  }
  return out;
}

} // namespace alcalc
