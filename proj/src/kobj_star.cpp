#include <algorithm>
#include <map>
#include <set>

#include "alcalc/errors.hpp"
#include "alcalc/kobj.hpp"
#include "alcalc/reval.hpp"

namespace alcalc {

// M * B_s.  With the wall-crossing identification, the generic fiber of the
// product at A is M_A^0 ⊕ M_{As}^0, and an element m ⊗ f has components
// (m_A · f(A), m_{As} · (sf)(As)).  Each generator m of M contributes the
// pair m ⊗ 1 and m ⊗ delta_s, with degrees deg(m) -+ 1 after the degree-one
// normalization shift of the tensor factor.
KObj star_bs(const KObj& m, int face) {
  const RootDatum& d = m.datum();
  const long long p = m.characteristic();
  if (m.rank() == 0) return m;

  const REval delta = delta_s(d, face, p);
  const REval sdelta = face_act(d, face, delta);

  // New support: every alcove adjacent to the old support across the wall.
  std::set<Alcove> supp;
  for (const auto& [a, r] : m.support()) {
    supp.insert(a);
    supp.insert(right_act(d, a, face));
  }

  // New slot layout: per alcove A, first the slots of M at A (shifted by the
  // tensor normalization), then the slots of M at As.
  struct Source { int old_slot; bool twisted; };  // twisted = second copy
  std::vector<KSlot> slots;
  std::vector<Source> src;
  for (const Alcove& a : supp) {
    Alcove as = right_act(d, a, face);
    auto r1 = m.slot_range(a);
    for (int s = r1.first; s < r1.second; ++s) {
      slots.push_back(KSlot{a, m.slots()[static_cast<size_t>(s)].sigma - 1});
      src.push_back({s, false});
    }
    auto r2 = m.slot_range(as);
    for (int s = r2.first; s < r2.second; ++s) {
      slots.push_back(KSlot{a, m.slots()[static_cast<size_t>(s)].sigma - 1});
      src.push_back({s, true});
    }
  }

  // Evaluations of delta_s and of its reflection, per new slot.
  std::vector<Poly> dval(slots.size()), sdval(slots.size());
  for (size_t s = 0; s < slots.size(); ++s) {
    const Alcove& a = slots[s].a;
    if (!src[s].twisted) {
      dval[s] = eval_at(d, delta, a);
    } else {
      sdval[s] = eval_at(d, sdelta, right_act(d, a, face));
    }
  }

  std::vector<KGen> gens;
  gens.reserve(static_cast<size_t>(2 * m.rank()));
  for (const KGen& g : m.gens()) {
    KGen g1;  // m ⊗ 1
    g1.degree = g.degree - 1;
    g1.comp.resize(slots.size(), Poly::zero(p));
    KGen g2;  // m ⊗ delta_s
    g2.degree = g.degree + 1;
    g2.comp.resize(slots.size(), Poly::zero(p));
    for (size_t s = 0; s < slots.size(); ++s) {
      const Poly& base = g.comp[static_cast<size_t>(src[s].old_slot)];
      if (base.is_zero()) continue;
      if (!src[s].twisted) {
        g1.comp[s] = base;
        g2.comp[s] = base * dval[s];
      } else {
        g1.comp[s] = base;
        g2.comp[s] = base * sdval[s];
      }
    }
    gens.push_back(std::move(g1));
    gens.push_back(std::move(g2));
  }
  return KObj(d, p, std::move(slots), std::move(gens));
}

KObj star_word(const KObj& m, const std::vector<int>& word) {
  KObj r = m;
  for (int s : word) r = star_bs(r, s);
  return r;
}

}  // namespace alcalc
