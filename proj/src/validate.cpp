#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "alcalc/errors.hpp"
#include "alcalc/kobj.hpp"
#include "alcalc/polysys.hpp"
#include "alcalc/validate.hpp"
#include "kobj_internal.hpp"

namespace alcalc {
namespace {

using AlcSet = std::set<Alcove>;

std::vector<Alcove> support_alcoves(const KObj& m) {
  std::vector<Alcove> v;
  for (const auto& [a, r] : m.support()) v.push_back(a);
  return v;
}

AlcSet up_in_supp(const RootDatum& d, const std::vector<Alcove>& supp, const Alcove& a) {
  AlcSet i;
  for (const Alcove& b : supp)
    if (leq(d, a, b)) i.insert(b);
  return i;
}

std::string set_str(const RootDatum& d, const AlcSet& i) {
  std::string s = "{";
  for (const Alcove& a : i) {
    if (s.size() > 1) s += ", ";
    s += alcove_str(d, a);
  }
  return s + "}";
}

/// Sections of the base object, computed once per distinct up-closed set.
struct SectionCache {
  const KObj* m;
  std::map<AlcSet, KObj> store;

  const KObj& get(const AlcSet& i) {
    auto it = store.find(i);
    if (it == store.end()) it = store.emplace(i, sections(*m, i)).first;
    return it->second;
  }
};

/// Degree-t k-dimension of a graded free lattice presented by its basis.
long long free_dim(const KObj& l, int rank, int t) {
  long long n = 0;
  for (const KGen& g : l.gens())
    n += static_cast<long long>(detail::monos_of_sdeg(rank, t - g.degree).size());
  return n;
}

/// Indices of the base object's slots lying over I, in slot order.  This is
/// exactly the slot layout of sections over I.
std::vector<int> kept_slots(const KObj& m, const AlcSet& i) {
  std::vector<int> keep;
  for (size_t s = 0; s < m.slots().size(); ++s)
    if (i.count(m.slots()[s].a)) keep.push_back(static_cast<int>(s));
  return keep;
}

/// Degree-t k-dimension of the sum of sublattices of m.  Each part is given
/// with the map from its slot indices to m's slot indices.
long long sum_dim(const KObj& m, const std::vector<const KObj*>& parts,
                  const std::vector<std::vector<int>>& maps, int t) {
  const int rank = m.datum().rank();
  const long long p = m.characteristic();
  const auto& slots = m.slots();

  std::vector<std::vector<Expo>> layout(slots.size());
  std::vector<int> off(slots.size() + 1, 0);
  for (size_t s = 0; s < slots.size(); ++s) {
    layout[s] = detail::monos_of_sdeg(rank, t - slots[s].sigma);
    off[s + 1] = off[s] + static_cast<int>(layout[s].size());
  }
  const int dim = off.back();
  if (dim == 0) return 0;

  detail::Span span(p);
  for (size_t k = 0; k < parts.size(); ++k) {
    for (const KGen& g : parts[k]->gens()) {
      for (const Expo& u : detail::monos_of_sdeg(rank, t - g.degree)) {
        const Poly mono = Poly::monomial(u, Fk::one(p));
        std::vector<Fk> v(static_cast<size_t>(dim), Fk::zero(p));
        for (size_t s = 0; s < g.comp.size(); ++s) {
          if (g.comp[s].is_zero()) continue;
          const Poly c = mono * g.comp[s];
          const int ms = maps[k][s];
          for (size_t q = 0; q < layout[ms].size(); ++q)
            v[static_cast<size_t>(off[ms]) + q] = c.coeff(layout[ms][q]);
        }
        span.add(std::move(v));
      }
    }
  }
  return span.dim();
}

/// Root-adic valuation of a nonzero polynomial.
int root_ord(const RootDatum& d, int r, Poly f) {
  int n = 0;
  while (divides_root(d, r, f)) {
    f = divide_exact(d, r, f);
    ++n;
  }
  return n;
}

/// Canonical key of the reflection-translation orbit of A for the positive
/// root r: the orbit is {(w, mu + n*alpha)} ∪ {(sw, s(mu) + n*alpha)}, so the
/// smaller of the two alpha-reduced normal forms identifies it.  Alcove
/// translation parts live in simple-root coordinates.
std::tuple<int, Coord, Coord> orbit_key(const RootDatum& d, int r, const Alcove& a) {
  const Root& al = d.alpha(r);
  const int s = d.reflection(r);
  const auto reduce = [&](int w, Vec2 mu) {
    const Coord t = RootDatum::pair(d.root_to_x(mu), al.covec);
    // floor(t / 2), exact for negatives
    const Coord n = (t >= 0) ? t / 2 : -((-t + 1) / 2);
    return std::tuple<int, Coord, Coord>(w, mu[0] - n * al.in_simple[0],
                                         mu[1] - n * al.in_simple[1]);
  };
  const auto k1 = reduce(a.w, a.mu);
  const auto k2 = reduce(d.w_mul(s, a.w), d.act_root(s, a.mu));
  return std::min(k1, k2);
}

}  // namespace

CheckResult check_sections_glue(const KObj& m, const ValidateOptions& opt) {
  CheckResult r{"section gluing", true, 0, ""};
  const RootDatum& d = m.datum();
  if (m.rank() == 0) return r;
  const std::vector<Alcove> supp = support_alcoves(m);
  SectionCache cache{&m, {}};

  // Sampled pairs: all incomparable principal pairs, then unions of such a
  // pair against a third principal set, capped.
  std::vector<std::pair<AlcSet, AlcSet>> pairs;
  for (size_t i = 0; i < supp.size(); ++i)
    for (size_t j = i + 1; j < supp.size(); ++j) {
      if (leq(d, supp[i], supp[j]) || leq(d, supp[j], supp[i])) continue;
      pairs.emplace_back(up_in_supp(d, supp, supp[i]), up_in_supp(d, supp, supp[j]));
    }
  const size_t first_order = pairs.size();
  for (size_t q = 0; q < first_order && pairs.size() < first_order + 4; ++q)
    for (size_t k = 0; k < supp.size() && pairs.size() < first_order + 4; ++k) {
      AlcSet u = pairs[q].first;
      u.insert(pairs[q].second.begin(), pairs[q].second.end());
      const AlcSet third = up_in_supp(d, supp, supp[k]);
      if (std::includes(u.begin(), u.end(), third.begin(), third.end())) continue;
      pairs.emplace_back(u, third);
    }
  if (static_cast<int>(pairs.size()) > opt.max_instances)
    pairs.resize(static_cast<size_t>(opt.max_instances));

  for (const auto& [i1, i2] : pairs) {
    AlcSet u = i1;
    u.insert(i2.begin(), i2.end());
    const KObj& s1 = cache.get(i1);
    const KObj& s2 = cache.get(i2);
    const KObj& su = cache.get(u);
    const std::vector<int> map1 = kept_slots(m, i1);
    const std::vector<int> map2 = kept_slots(m, i2);
    // Equality in all degrees up to the top generator degree of the union
    // lattice implies equality as modules (the quotient is generated there).
    for (int t = su.min_degree(); t <= su.max_degree(); ++t) {
      const long long want = free_dim(su, d.rank(), t);
      const long long got = sum_dim(m, {&s1, &s2}, {map1, map2}, t);
      if (got != want) {
        r.ok = false;
        std::ostringstream w;
        w << "I1 = " << set_str(d, i1) << ", I2 = " << set_str(d, i2)
          << ": degree " << t << " dimension of the sum is " << got
          << ", sections over the union have " << want;
        r.witness = w.str();
        return r;
      }
    }
    ++r.instances;
  }
  return r;
}

CheckResult check_local_decomposition(const KObj& m) {
  CheckResult r{"local decomposition", true, 0, ""};
  const RootDatum& d = m.datum();
  const long long p = m.characteristic();
  if (m.rank() == 0) return r;

  const PolyMat g = m.slot_matrix();
  if (g.rows() != g.cols()) {
    r.ok = false;
    r.witness = "generic fibers are not spanned by the lattice (slot count " +
                std::to_string(g.rows()) + " vs rank " + std::to_string(g.cols()) + ")";
    return r;
  }
  const AdjResult ag = poly_adjugate(g);
  const int n = g.rows();

  for (int root = 0; root < d.num_positive(); ++root) {
    // Partition the slots by reflection-translation orbit of the root.
    std::map<std::tuple<int, Coord, Coord>, std::vector<int>> blocks;
    for (int s = 0; s < n; ++s)
      blocks[orbit_key(d, root, m.slots()[static_cast<size_t>(s)].a)].push_back(s);
    if (blocks.size() <= 1) continue;
    const int det_ord = root_ord(d, root, ag.det);

    for (int j = 0; j < m.rank(); ++j) {
      // Orbit blocks the generator touches; a single block means the
      // projection is the generator itself.
      std::set<const std::vector<int>*> touched;
      for (const auto& [key, rows] : blocks)
        for (int s : rows)
          if (!g.at(s, j).is_zero()) {
            touched.insert(&rows);
            break;
          }
      if (touched.size() <= 1) continue;

      for (const std::vector<int>* rows : touched) {
        // Generic coordinates of the block projection of generator j:
        // adj(G) * x has the coordinates scaled by det(G), so membership in
        // the localization away from this root is a valuation inequality.
        PolyMat x(n, 1, p);
        for (int s : *rows) x.at(s, 0) = g.at(s, j);
        const PolyMat c = ag.adj * x;
        for (int i = 0; i < n; ++i) {
          if (c.at(i, 0).is_zero()) continue;
          const int o = root_ord(d, root, c.at(i, 0));
          if (o < det_ord) {
            r.ok = false;
            std::ostringstream w;
            w << "root " << root_poly(d, root, p).str(d.var_names()) << ", generator " << j
              << ", orbit of " << alcove_str(d, m.slots()[static_cast<size_t>((*rows)[0])].a)
              << ": coordinate " << i << " has denominator valuation " << (det_ord - o);
            r.witness = w.str();
            return r;
          }
        }
        ++r.instances;
      }
    }
  }
  return r;
}

CheckResult check_standard_filtration(const KObj& m) {
  CheckResult r{"standard filtration", true, 0, ""};
  const RootDatum& d = m.datum();
  if (m.rank() == 0) return r;
  std::vector<Alcove> rem = support_alcoves(m);
  SectionCache cache{&m, {}};

  // Peel a minimal support alcove per step; suffixes of the removal order
  // are up-closed, so they form a chain of closed sets with singleton steps.
  std::vector<Alcove> order;
  while (!rem.empty()) {
    size_t pick = rem.size();
    for (size_t i = 0; i < rem.size() && pick == rem.size(); ++i) {
      bool is_min = true;
      for (size_t j = 0; j < rem.size() && is_min; ++j)
        if (j != i && leq(d, rem[j], rem[i])) is_min = false;
      if (is_min) pick = i;
    }
    order.push_back(rem[pick]);
    rem.erase(rem.begin() + static_cast<long>(pick));
  }

  const size_t n = order.size();
  std::vector<LaurentPoly> suffix(n + 1, LaurentPoly::zero());
  AlcSet upper;
  for (size_t j = n; j-- > 0;) {
    upper.insert(order[j]);
    suffix[j] = cache.get(upper).grk();
  }
  if (!(suffix[0] == m.grk())) {
    r.ok = false;
    r.witness = "sections over the whole support have graded rank " + suffix[0].str() +
                ", object has " + m.grk().str();
    return r;
  }
  for (size_t j = 0; j < n; ++j) {
    const LaurentPoly diff = suffix[j] - suffix[j + 1];
    const LaurentPoly st = stalk_grk(m, order[j]);
    if (!(diff == st) || !diff.nonneg()) {
      r.ok = false;
      std::ostringstream w;
      w << "step " << alcove_str(d, order[j]) << ": quotient graded rank " << diff.str()
        << (diff.nonneg() ? "" : " (negative coefficient)") << ", stalk " << st.str();
      r.witness = w.str();
      return r;
    }
    ++r.instances;
  }
  return r;
}

CheckResult check_section_triples(const KObj& m, const ValidateOptions& opt) {
  CheckResult r{"section triples", true, 0, ""};
  const RootDatum& d = m.datum();
  if (m.rank() == 0) return r;
  const std::vector<Alcove> supp = support_alcoves(m);
  SectionCache cache{&m, {}};

  // Nested pairs J ⊂ I of up-closed sets: principal inside full, and
  // principal inside principal for comparable base alcoves.
  AlcSet full(supp.begin(), supp.end());
  std::vector<std::pair<AlcSet, AlcSet>> nested;  // (J, I)
  for (const Alcove& a : supp) {
    const AlcSet ua = up_in_supp(d, supp, a);
    if (ua != full) nested.emplace_back(ua, full);
    for (const Alcove& b : supp)
      if (!(a == b) && leq(d, a, b))
        nested.emplace_back(up_in_supp(d, supp, b), ua);
  }
  if (static_cast<int>(nested.size()) > opt.max_instances)
    nested.resize(static_cast<size_t>(opt.max_instances));

  // Stalks memoized per section set (the same sets recur across pairs).
  std::map<Alcove, LaurentPoly> ambient_stalk;
  for (const Alcove& a : supp) ambient_stalk.emplace(a, stalk_grk(m, a));
  std::map<AlcSet, std::map<Alcove, LaurentPoly>> set_stalk;
  const auto stalk_of = [&](const AlcSet& i, const Alcove& a) -> const LaurentPoly& {
    auto& per = set_stalk[i];
    auto it = per.find(a);
    if (it == per.end()) it = per.emplace(a, stalk_grk(cache.get(i), a)).first;
    return it->second;
  };

  for (const auto& [jset, iset] : nested) {
    const KObj& si = cache.get(iset);
    const KObj& sj = cache.get(jset);
    LaurentPoly complement = LaurentPoly::zero();
    for (const Alcove& a : iset) {
      const LaurentPoly& ambient = ambient_stalk.at(a);
      const LaurentPoly& in_i = stalk_of(iset, a);
      if (!(in_i == ambient)) {
        r.ok = false;
        r.witness = "stalk at " + alcove_str(d, a) + " changes under sections over I = " +
                    set_str(d, iset) + ": " + in_i.str() + " vs " + ambient.str();
        return r;
      }
      if (jset.count(a)) {
        const LaurentPoly& in_j = stalk_of(jset, a);
        if (!(in_j == ambient)) {
          r.ok = false;
          r.witness = "stalk at " + alcove_str(d, a) + " changes under sections over J = " +
                      set_str(d, jset) + ": " + in_j.str() + " vs " + ambient.str();
          return r;
        }
      } else {
        complement = complement + ambient;
      }
    }
    if (!(si.grk() == sj.grk() + complement)) {
      r.ok = false;
      r.witness = "J = " + set_str(d, jset) + " inside I = " + set_str(d, iset) +
                  ": graded ranks " + si.grk().str() + " vs " + sj.grk().str() + " + " +
                  complement.str();
      return r;
    }
    ++r.instances;
  }
  return r;
}

std::vector<CheckResult> validate(const KObj& m, const ValidateOptions& opt) {
  m.check_shape();
  return {check_sections_glue(m, opt), check_local_decomposition(m),
          check_standard_filtration(m), check_section_triples(m, opt)};
}

}  // namespace alcalc
