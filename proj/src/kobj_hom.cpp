#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "alcalc/alcove.hpp"
#include "alcalc/errors.hpp"
#include "alcalc/kobj.hpp"
#include "alcalc/linalg.hpp"
#include "alcalc/polysys.hpp"
#include "kobj_internal.hpp"

namespace alcalc {

namespace {

// A morphism block M_A^0 -> N_{A'}^0 may be nonzero only when both alcoves
// lie in one translation orbit (same finite part) and A <= A' in the generic
// order.  Everything else is a forbidden block.
bool block_allowed(const RootDatum& d, const Alcove& src, const Alcove& dst,
                   std::map<std::pair<Alcove, Alcove>, bool>& memo) {
  if (dst.w != src.w) return false;
  if (src == dst) return true;
  auto key = std::make_pair(src, dst);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = leq(d, src, dst);
  memo.emplace(key, ok);
  return ok;
}

struct HomSystem {
  struct Unknown {
    int j = 0;  // target generator
    int i = 0;  // source generator
    Expo mono{};
  };
  std::vector<Unknown> unk;
  PolyMat h;       // target slot matrix
  AdjResult adj;   // adjugate data of the source slot matrix
};

// Shared setup: the generic matrix of a morphism with coefficient matrix C is
// F = H * C * G^{-1}; clearing det(G) gives the polynomial matrix
// P = H * C * adj(G), whose entries are k-linear in the coefficients of C.
HomSystem hom_system(const KObj& m, const KObj& n, int degree) {
  const RootDatum& d = m.datum();
  if (&d != &n.datum() || m.characteristic() != n.characteristic())
    throw VerificationFailure("hom: objects live over different base data");
  if (static_cast<int>(m.slots().size()) != m.rank())
    throw VerificationFailure("hom: source lattice is not generically trivialized");
  HomSystem sys;
  sys.h = n.slot_matrix();
  sys.adj = poly_adjugate(m.slot_matrix());
  if (sys.adj.det.is_zero())
    throw VerificationFailure("hom: source lattice is generically degenerate");
  const int rank = d.rank();
  for (int j = 0; j < n.rank(); ++j)
    for (int i = 0; i < m.rank(); ++i) {
      int e = m.gens()[static_cast<size_t>(i)].degree + degree -
              n.gens()[static_cast<size_t>(j)].degree;
      for (const Expo& mo : detail::monos_of_sdeg(rank, e)) sys.unk.push_back({j, i, mo});
    }
  return sys;
}

// Coefficient rows of the entries P(sn, sm) over the given slot pairs, one
// row per (pair, monomial); rows are deduplicated through a Span so the
// resulting system stays small.
void entry_rows(const HomSystem& sys, const KObj& m, const KObj& n,
                const std::vector<std::pair<int, int>>& pairs, long long p,
                std::vector<std::vector<Fk>>& rows) {
  detail::Span span(p);
  const size_t nunk = sys.unk.size();
  for (const auto& pr : pairs) {
    const int sn = pr.first, sm = pr.second;
    std::map<Expo, std::vector<Fk>> local;
    for (size_t u = 0; u < nunk; ++u) {
      const auto& w = sys.unk[u];
      const Poly& hp = sys.h.at(sn, w.j);
      if (hp.is_zero()) continue;
      const Poly& ap = sys.adj.adj.at(w.i, sm);
      if (ap.is_zero()) continue;
      Poly q = hp * ap * Poly::monomial(w.mono, Fk::one(p));
      for (const auto& term : q.terms()) {
        auto it = local.find(term.first);
        if (it == local.end())
          it = local.emplace(term.first, std::vector<Fk>(nunk, Fk::zero(p))).first;
        it->second[u] += term.second;
      }
    }
    for (auto& kv : local)
      if (span.add(std::move(kv.second))) rows.push_back(span.rows().back());
  }
}

}  // namespace

std::vector<KHom> hom_basis(const KObj& m, const KObj& n, int degree) {
  if (m.rank() == 0 || n.rank() == 0) return {};
  const RootDatum& d = m.datum();
  const long long p = m.characteristic();
  HomSystem sys = hom_system(m, n, degree);
  if (sys.unk.empty()) return {};

  // Forbidden blocks of P = H * C * adj(G) must vanish identically.
  std::map<std::pair<Alcove, Alcove>, bool> memo;
  std::vector<std::pair<int, int>> forbidden;
  for (size_t sn = 0; sn < n.slots().size(); ++sn)
    for (size_t sm = 0; sm < m.slots().size(); ++sm)
      if (!block_allowed(d, m.slots()[sm].a, n.slots()[sn].a, memo))
        forbidden.push_back({static_cast<int>(sn), static_cast<int>(sm)});

  std::vector<std::vector<Fk>> rows;
  entry_rows(sys, m, n, forbidden, p, rows);

  std::vector<std::vector<Fk>> sols;
  if (rows.empty()) {
    for (size_t u = 0; u < sys.unk.size(); ++u) {
      std::vector<Fk> e(sys.unk.size(), Fk::zero(p));
      e[u] = Fk::one(p);
      sols.push_back(std::move(e));
    }
  } else {
    Mat a(static_cast<int>(rows.size()), static_cast<int>(sys.unk.size()), p);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t u = 0; u < sys.unk.size(); ++u)
        a.at(static_cast<int>(r), static_cast<int>(u)) = rows[r][u];
    sols = kernel_basis(a);
  }

  std::vector<KHom> out;
  out.reserve(sols.size());
  for (const auto& sol : sols) {
    KHom f;
    f.degree = degree;
    f.c = PolyMat(n.rank(), m.rank(), p);
    for (size_t u = 0; u < sys.unk.size(); ++u) {
      if (sol[u].is_zero()) continue;
      const auto& w = sys.unk[u];
      f.c.at(w.j, w.i) = f.c.at(w.j, w.i) + Poly::monomial(w.mono, sol[u]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<KHom> hom_basis_K(const KObj& m, const KObj& n, int degree) {
  std::vector<KHom> amb = hom_basis(m, n, degree);
  if (amb.empty()) return amb;
  const long long p = m.characteristic();

  // Stalk components of a morphism vanish exactly when the diagonal generic
  // blocks vanish; quotient representatives are the basis elements whose
  // diagonal-entry coefficient vectors extend the span of their predecessors.
  std::vector<std::pair<int, int>> diag;
  for (size_t sn = 0; sn < n.slots().size(); ++sn)
    for (size_t sm = 0; sm < m.slots().size(); ++sm)
      if (n.slots()[sn].a == m.slots()[sm].a)
        diag.push_back({static_cast<int>(sn), static_cast<int>(sm)});
  if (diag.empty()) return {};

  PolyMat h = n.slot_matrix();
  AdjResult adj = poly_adjugate(m.slot_matrix());

  // Coordinates of the diagonal entries of H * C_f * adj(G).
  std::map<std::tuple<int, int, Expo>, int> coords;
  std::vector<std::vector<Fk>> vecs;
  for (const KHom& f : amb) {
    PolyMat num = h * f.c * adj.adj;
    std::vector<Fk>& v = vecs.emplace_back();
    v.assign(coords.size(), Fk::zero(p));
    for (const auto& pr : diag) {
      const Poly& q = num.at(pr.first, pr.second);
      for (const auto& term : q.terms()) {
        auto key = std::make_tuple(pr.first, pr.second, term.first);
        auto it = coords.find(key);
        if (it == coords.end()) it = coords.emplace(key, static_cast<int>(coords.size())).first;
        if (static_cast<size_t>(it->second) >= v.size()) v.resize(coords.size(), Fk::zero(p));
        v[static_cast<size_t>(it->second)] += term.second;
      }
    }
  }
  for (auto& v : vecs) v.resize(coords.size(), Fk::zero(p));

  detail::Span span(p);
  std::vector<KHom> out;
  for (size_t b = 0; b < amb.size(); ++b)
    if (span.add(std::move(vecs[b]))) out.push_back(std::move(amb[b]));
  return out;
}

KHom hom_compose(const KHom& f, const KHom& g) {
  KHom r;
  r.degree = f.degree + g.degree;
  r.c = f.c * g.c;
  return r;
}

std::vector<Poly> hom_apply(const KHom& f, const std::vector<Poly>& coeffs) {
  if (static_cast<int>(coeffs.size()) != f.c.cols())
    throw VerificationFailure("hom apply: coefficient length mismatch");
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(f.c.rows()));
  const long long p = f.c.characteristic();
  for (int i = 0; i < f.c.rows(); ++i) {
    Poly acc = Poly::zero(p);
    for (int j = 0; j < f.c.cols(); ++j) {
      if (f.c.at(i, j).is_zero() || coeffs[static_cast<size_t>(j)].is_zero()) continue;
      acc += f.c.at(i, j) * coeffs[static_cast<size_t>(j)];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace alcalc
