#include <algorithm>
#include <set>

#include "alcalc/errors.hpp"
#include "alcalc/kobj.hpp"
#include "kobj_internal.hpp"

namespace alcalc {

KObj sections(const KObj& m, const std::set<Alcove>& upper, int dmax) {
  const RootDatum& d = m.datum();
  const long long p = m.characteristic();
  const auto& slots = m.slots();
  const int rank = d.rank();

  // Slots that must vanish, and the expected generic rank over the kept part.
  std::vector<int> dead;
  int expected = 0;
  for (size_t s = 0; s < slots.size(); ++s) {
    if (upper.count(slots[s].a)) {
      ++expected;
    } else {
      dead.push_back(static_cast<int>(s));
    }
  }
  if (expected == 0) return KObj(d, p, {}, {});
  if (dead.empty()) return m;  // sections over the whole support

  auto cons = [&](int t, const std::vector<Poly>&, const std::vector<Poly>& comp,
                  std::vector<Fk>& out) {
    for (int s : dead)
      for (const Expo& e :
           detail::monos_of_sdeg(rank, t - slots[static_cast<size_t>(s)].sigma))
        out.push_back(comp[static_cast<size_t>(s)].coeff(e));
  };

  const int window = dmax >= 0 ? dmax : detail::default_window(m);
  auto found = detail::solve_degreewise(m, cons, m.min_degree(), m.max_degree() + window,
                                        expected, 2 * d.num_positive());

  // Keep only the surviving slots in the presentation.
  std::vector<KSlot> nslots;
  std::vector<int> keep;
  for (size_t s = 0; s < slots.size(); ++s)
    if (upper.count(slots[s].a)) {
      nslots.push_back(slots[s]);
      keep.push_back(static_cast<int>(s));
    }
  std::vector<KGen> gens;
  gens.reserve(found.size());
  for (auto& f : found) {
    KGen g;
    g.degree = f.degree;
    g.comp.reserve(keep.size());
    for (int s : keep) g.comp.push_back(f.comp[static_cast<size_t>(s)]);
    gens.push_back(std::move(g));
  }
  KObj out(d, p, std::move(nslots), std::move(gens));
  if (out.rank() > expected)
    throw VerificationFailure("sections: generators exceed the generic rank");
  if (out.rank() < expected || poly_rank(out.slot_matrix()) != expected)
    throw BoundExceeded("sections: degree window did not reach full generic rank");
  return out;
}

LaurentPoly stalk_grk(const KObj& m, const Alcove& a, int dmax) {
  const RootDatum& d = m.datum();
  if (m.rank_at(a) == 0) return LaurentPoly::zero();
  std::set<Alcove> i1, i0;
  for (const auto& [b, r] : m.support())
    if (leq(d, a, b)) {
      i1.insert(b);
      if (!(b == a)) i0.insert(b);
    }
  LaurentPoly g1 = sections(m, i1, dmax).grk();
  LaurentPoly g0 = sections(m, i0, dmax).grk();
  return g1 - g0;
}

CharObj kobj_char(const KObj& m, int dmax) {
  CharObj c;
  for (const auto& [a, r] : m.support()) {
    LaurentPoly s = stalk_grk(m, a, dmax);
    if (!s.is_zero()) c.grk[a] = s;
  }
  return c;
}

}  // namespace alcalc
