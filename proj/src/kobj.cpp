#include "alcalc/kobj.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

#include "alcalc/errors.hpp"
#include "alcalc/linalg.hpp"
#include "kobj_internal.hpp"

namespace alcalc {

namespace detail {

std::vector<Expo> monos_of_sdeg(int rank, int sdeg) {
  std::vector<Expo> out;
  if (sdeg < 0 || sdeg % 2 != 0) return out;
  int n = sdeg / 2;
  if (rank == 1) {
    out.push_back(Expo{n, 0});
  } else {
    for (int i = n; i >= 0; --i) out.push_back(Expo{i, n - i});
  }
  return out;
}

bool Span::add(std::vector<Fk> v) {
  const Fk one = Fk::one(p_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Fk c = v[static_cast<size_t>(piv_[r])];  // copy: the loop writes v[piv]
    if (c.is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[r][j];
  }
  int piv = -1;
  for (size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) { piv = static_cast<int>(j); break; }
  if (piv < 0) return false;
  Fk inv = one / v[static_cast<size_t>(piv)];
  for (size_t j = 0; j < v.size(); ++j) v[j] *= inv;
  rows_.push_back(std::move(v));
  piv_.push_back(piv);
  return true;
}

int wf_order(const RootDatum& d) { return 2 * d.num_positive(); }

int default_window(const KObj& m) {
  int wf = wf_order(m.datum());
  int l = 0;
  while ((wf << l) < m.rank()) ++l;  // rank = |W_f| * 2^length for covers
  return 2 * (l + wf);
}

std::vector<FoundGen> solve_degreewise(const KObj& host, const ConstraintFn& cons,
                                       int t_lo, int t_hi, int expected, int grace) {
  const RootDatum& d = host.datum();
  const long long p = host.characteristic();
  const int rank = d.rank();
  const auto& slots = host.slots();
  const auto& gens = host.gens();
  std::vector<FoundGen> found;
  int last_find = t_lo - 1;

  for (int t = t_lo; t <= t_hi; ++t) {
    if (expected >= 0 && static_cast<int>(found.size()) >= expected && t - last_find > grace)
      break;
    // Unknowns: one monomial coefficient per (generator, monomial of the
    // complementary degree).
    struct Unknown { int gen; Expo mono; };
    std::vector<Unknown> unk;
    for (size_t i = 0; i < gens.size(); ++i)
      for (const Expo& e : monos_of_sdeg(rank, t - gens[i].degree))
        unk.push_back({static_cast<int>(i), e});
    if (unk.empty()) continue;

    // Slot-coordinate layout of homogeneous degree-t elements.
    std::vector<std::vector<Expo>> slot_monos(slots.size());
    std::vector<int> offset(slots.size() + 1, 0);
    for (size_t s = 0; s < slots.size(); ++s) {
      slot_monos[s] = monos_of_sdeg(rank, t - slots[s].sigma);
      offset[s + 1] = offset[s] + static_cast<int>(slot_monos[s].size());
    }
    const int dim = offset[slots.size()];
    if (dim == 0) continue;  // no nonzero elements in this degree

    auto coords_of = [&](const std::vector<Poly>& comp) {
      std::vector<Fk> v(static_cast<size_t>(dim), Fk::zero(p));
      for (size_t s = 0; s < slots.size(); ++s)
        for (size_t q = 0; q < slot_monos[s].size(); ++q)
          v[static_cast<size_t>(offset[s]) + q] = comp[s].coeff(slot_monos[s][q]);
      return v;
    };

    // Constraint matrix, one column per unknown.
    std::vector<std::vector<Fk>> cols;
    cols.reserve(unk.size());
    size_t nrows = 0;
    for (size_t u = 0; u < unk.size(); ++u) {
      std::vector<Poly> coeff(gens.size(), Poly::zero(p));
      coeff[static_cast<size_t>(unk[u].gen)] = Poly::monomial(unk[u].mono, Fk::one(p));
      std::vector<Poly> comp(slots.size(), Poly::zero(p));
      const Poly mono = coeff[static_cast<size_t>(unk[u].gen)];
      const auto& g = gens[static_cast<size_t>(unk[u].gen)];
      for (size_t s = 0; s < slots.size(); ++s)
        if (!g.comp[s].is_zero()) comp[s] = mono * g.comp[s];
      std::vector<Fk> out;
      cons(t, coeff, comp, out);
      if (u == 0) nrows = out.size();
      if (out.size() != nrows)
        throw VerificationFailure("degreewise solver: inconsistent constraint rows");
      cols.push_back(std::move(out));
    }

    std::vector<std::vector<Fk>> solutions;
    if (nrows == 0) {
      // No constraints: every unknown direction solves.
      for (size_t u = 0; u < unk.size(); ++u) {
        std::vector<Fk> e(unk.size(), Fk::zero(p));
        e[u] = Fk::one(p);
        solutions.push_back(std::move(e));
      }
    } else {
      Mat a(static_cast<int>(nrows), static_cast<int>(unk.size()), p);
      for (size_t u = 0; u < unk.size(); ++u)
        for (size_t r = 0; r < nrows; ++r) a.at(static_cast<int>(r), static_cast<int>(u)) = cols[u][r];
      solutions = kernel_basis(a);
    }
    if (std::getenv("ALCALC_DEBUG"))
      std::fprintf(stderr, "[solve] t=%d unk=%zu dim=%d nrows=%zu sols=%zu found=%zu\n", t,
                   unk.size(), dim, nrows, solutions.size(), found.size());
    if (solutions.empty()) continue;

    // Span of S-multiples of earlier finds in this degree.
    Span span(p);
    for (const FoundGen& f : found)
      for (const Expo& e : monos_of_sdeg(rank, t - f.degree)) {
        Poly mono = Poly::monomial(e, Fk::one(p));
        std::vector<Poly> comp(slots.size(), Poly::zero(p));
        for (size_t s = 0; s < slots.size(); ++s)
          if (!f.comp[s].is_zero()) comp[s] = mono * f.comp[s];
        span.add(coords_of(comp));
      }

    for (const auto& sol : solutions) {
      std::vector<Poly> coeff(gens.size(), Poly::zero(p));
      for (size_t u = 0; u < unk.size(); ++u) {
        if (sol[u].is_zero()) continue;
        coeff[static_cast<size_t>(unk[u].gen)] += Poly::monomial(unk[u].mono, sol[u]);
      }
      std::vector<Poly> comp(slots.size(), Poly::zero(p));
      for (size_t i = 0; i < gens.size(); ++i) {
        if (coeff[i].is_zero()) continue;
        for (size_t s = 0; s < slots.size(); ++s)
          if (!gens[i].comp[s].is_zero()) comp[s] += coeff[i] * gens[i].comp[s];
      }
      if (span.add(coords_of(comp))) {
        found.push_back({t, std::move(coeff), std::move(comp)});
        last_find = t;
      }
    }
  }
  return found;
}

KObj compress_fibers(const RootDatum& d, long long p, const std::vector<KSlot>& slots,
                     const std::vector<FoundGen>& gens) {
  if (gens.empty()) return KObj(d, p, {}, {});
  // Group ambient slots into alcove blocks.
  std::vector<int> keep;
  size_t s = 0;
  while (s < slots.size()) {
    size_t e = s;
    while (e < slots.size() && slots[e].a == slots[s].a) ++e;
    // Greedily keep rows of this block that raise the generic rank.
    std::vector<int> rows;
    for (size_t r = s; r < e; ++r) {
      PolyMat m(static_cast<int>(rows.size()) + 1, static_cast<int>(gens.size()), p);
      for (size_t k = 0; k < rows.size(); ++k)
        for (size_t j = 0; j < gens.size(); ++j)
          m.at(static_cast<int>(k), static_cast<int>(j)) = gens[j].comp[static_cast<size_t>(rows[k])];
      for (size_t j = 0; j < gens.size(); ++j)
        m.at(static_cast<int>(rows.size()), static_cast<int>(j)) = gens[j].comp[r];
      if (poly_rank(m) == static_cast<int>(rows.size()) + 1) rows.push_back(static_cast<int>(r));
    }
    for (int r : rows) keep.push_back(r);
    s = e;
  }
  std::vector<KSlot> nslots;
  nslots.reserve(keep.size());
  for (int r : keep) nslots.push_back(slots[static_cast<size_t>(r)]);
  std::vector<KGen> ngens;
  ngens.reserve(gens.size());
  for (const FoundGen& g : gens) {
    KGen kg;
    kg.degree = g.degree;
    kg.comp.reserve(keep.size());
    for (int r : keep) kg.comp.push_back(g.comp[static_cast<size_t>(r)]);
    ngens.push_back(std::move(kg));
  }
  return KObj(d, p, std::move(nslots), std::move(ngens));
}

}  // namespace detail

KObj::KObj(const RootDatum& d, long long p, std::vector<KSlot> slots, std::vector<KGen> gens)
    : d_(&d), p_(p), slots_(std::move(slots)), gens_(std::move(gens)) {
  check_shape();
}

std::vector<std::pair<Alcove, int>> KObj::support() const {
  std::vector<std::pair<Alcove, int>> out;
  for (size_t s = 0; s < slots_.size(); ++s) {
    if (out.empty() || !(out.back().first == slots_[s].a)) out.push_back({slots_[s].a, 0});
    ++out.back().second;
  }
  return out;
}

int KObj::rank_at(const Alcove& a) const {
  auto r = slot_range(a);
  return r.second - r.first;
}

std::pair<int, int> KObj::slot_range(const Alcove& a) const {
  int first = static_cast<int>(slots_.size());
  int last = first;
  for (size_t s = 0; s < slots_.size(); ++s)
    if (slots_[s].a == a) {
      first = static_cast<int>(s);
      last = first;
      while (last < static_cast<int>(slots_.size()) && slots_[static_cast<size_t>(last)].a == a) ++last;
      break;
    }
  return {first, last};
}

KObj KObj::shifted(int n) const {
  if (n == 0 || !d_) return *this;
  KObj r = *this;
  for (KSlot& s : r.slots_) s.sigma -= n;
  for (KGen& g : r.gens_) g.degree -= n;
  return r;
}

int KObj::min_degree() const {
  int m = 0;
  for (size_t i = 0; i < gens_.size(); ++i)
    m = (i == 0) ? gens_[i].degree : std::min(m, gens_[i].degree);
  return m;
}

int KObj::max_degree() const {
  int m = 0;
  for (size_t i = 0; i < gens_.size(); ++i)
    m = (i == 0) ? gens_[i].degree : std::max(m, gens_[i].degree);
  return m;
}

LaurentPoly KObj::grk() const {
  LaurentPoly g;
  for (const KGen& gen : gens_) g += LaurentPoly::v_pow(-gen.degree);
  return g;
}

PolyMat KObj::slot_matrix() const {
  PolyMat m(static_cast<int>(slots_.size()), static_cast<int>(gens_.size()), p_);
  for (size_t s = 0; s < slots_.size(); ++s)
    for (size_t j = 0; j < gens_.size(); ++j) m.at(static_cast<int>(s), static_cast<int>(j)) = gens_[j].comp[s];
  return m;
}

void KObj::check_shape() const {
  // Alcove blocks contiguous and sorted.
  for (size_t s = 0; s + 1 < slots_.size(); ++s) {
    if (slots_[s + 1].a == slots_[s].a) continue;
    if (!(slots_[s].a < slots_[s + 1].a))
      throw VerificationFailure("lattice object: slot blocks not sorted by alcove");
  }
  for (const KGen& g : gens_) {
    if (g.comp.size() != slots_.size())
      throw VerificationFailure("lattice object: component count mismatch");
    for (size_t s = 0; s < slots_.size(); ++s) {
      const Poly& f = g.comp[s];
      if (f.is_zero()) continue;
      if (!f.is_homogeneous() || f.degree() != g.degree - slots_[s].sigma)
        throw VerificationFailure("lattice object: inhomogeneous generator component");
    }
  }
}

KObj make_S_A(const RootDatum& d, long long p, const Alcove& a, int shift) {
  std::vector<KSlot> slots{KSlot{a, -shift}};
  KGen g;
  g.degree = -shift;
  g.comp.push_back(Poly::constant(Fk::one(p)));
  return KObj(d, p, std::move(slots), {std::move(g)});
}

KObj make_Q_lambda(const RootDatum& d, long long p, const Vec2& lambda) {
  GkmReport rep = d.gkm_check(p);
  if (!rep.ok) throw GkmViolation(rep.str());
  std::vector<Alcove> orbit = wlambda_orbit(d, lambda);
  std::sort(orbit.begin(), orbit.end());
  std::map<Alcove, int> index;
  for (size_t i = 0; i < orbit.size(); ++i) index[orbit[i]] = static_cast<int>(i);

  // Host: the free module with one degree-0 slot and unit generator per
  // orbit alcove.
  std::vector<KSlot> slots;
  std::vector<KGen> units;
  for (const Alcove& a : orbit) {
    slots.push_back(KSlot{a, 0});
    KGen g;
    g.degree = 0;
    g.comp.assign(orbit.size(), Poly::zero(p));
    g.comp[slots.size() - 1] = Poly::constant(Fk::one(p));
    units.push_back(std::move(g));
  }
  KObj host(d, p, slots, units);

  // Congruence pairs: for every positive root alpha and orbit alcove A, the
  // reflection in the lambda-level wall of alpha maps A to another orbit
  // alcove B, and components must agree modulo alpha.
  struct Cong { int a, b, root; };
  std::vector<Cong> congs;
  std::set<std::tuple<int, int, int>> seen;
  for (const Alcove& a : orbit) {
    for (int r = 0; r < d.num_positive(); ++r) {
      Coord n = lambda_pair(d, lambda, r);
      Alcove b = left_act(d, reflection_elt(d, r, n), a);
      auto ita = index.find(a);
      auto itb = index.find(b);
      if (itb == index.end())
        throw VerificationFailure("orbit lattice: reflection leaves the orbit");
      int ia = ita->second, ib = itb->second;
      if (ia == ib) throw VerificationFailure("orbit lattice: reflection fixes an alcove");
      auto key = std::make_tuple(std::min(ia, ib), std::max(ia, ib), r);
      if (seen.insert(key).second) congs.push_back({std::min(ia, ib), std::max(ia, ib), r});
    }
  }

  const int rank = d.rank();
  auto cons = [&](int t, const std::vector<Poly>&, const std::vector<Poly>& comp,
                  std::vector<Fk>& out) {
    for (const Cong& c : congs) {
      Poly diff = comp[static_cast<size_t>(c.a)] - comp[static_cast<size_t>(c.b)];
      Poly q, rem;
      divmod_root(d, c.root, diff, q, rem);
      for (const Expo& e : detail::monos_of_sdeg(rank, t)) out.push_back(rem.coeff(e));
    }
  };

  auto found = detail::solve_degreewise(host, cons, 0, 2 * detail::wf_order(d),
                                        static_cast<int>(orbit.size()), 2 * d.num_positive());
  if (static_cast<int>(found.size()) != static_cast<int>(orbit.size()))
    throw BoundExceeded("orbit lattice: degree window did not reach full rank");
  std::vector<KGen> gens;
  for (auto& f : found) gens.push_back(KGen{f.degree, std::move(f.comp)});
  KObj q(d, p, slots, std::move(gens));
  if (poly_rank(q.slot_matrix()) != q.rank())
    throw VerificationFailure("orbit lattice: generators not generically independent");
  return q;
}

}  // namespace alcalc
