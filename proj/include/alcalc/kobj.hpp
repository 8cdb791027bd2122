#pragma once

// Graded lattice objects over the structure algebra of an alcove set.
//
// A KObj represents a graded (S, R)-bimodule M together with its generic
// decomposition M^0 = ⊕_A M_A^0 into alcove components: finitely many
// support alcoves A, each carrying a free generic fiber of finite rank, and
// an S-basis of homogeneous lattice generators given by their component
// vectors in those fibers.  The right action of the periodic structure ring
// on a component at A is multiplication by the evaluation of the ring
// element at A, diagonally in the slots.
//
// Invariants maintained by every constructor in this module:
//   * slots are grouped by alcove and alcove blocks are sorted;
//   * every generator is homogeneous: for each slot with shift sigma, the
//     component has S-degree (generator degree - sigma), or vanishes;
//   * components are polynomial (denominator-free) even though the ambient
//     fibers are localized;
//   * the generators are linearly independent over the generic base, and
//     their span is degreewise saturated in the lattice it presents.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "alcalc/alcove.hpp"
#include "alcalc/charobj.hpp"
#include "alcalc/polysys.hpp"
#include "alcalc/root_datum.hpp"
#include "alcalc/rootfrac.hpp"

namespace alcalc {

/// One generic-fiber coordinate: the alcove it sits over and the degree
/// shift of the coordinate line (component degree + sigma = element degree).
struct KSlot {
  Alcove a;
  int sigma = 0;

  bool operator==(const KSlot& o) const { return a == o.a && sigma == o.sigma; }
};

/// A homogeneous lattice generator: its degree and one component per slot.
struct KGen {
  int degree = 0;
  std::vector<Poly> comp;
};

class KObj {
 public:
  KObj() = default;
  KObj(const RootDatum& d, long long p, std::vector<KSlot> slots, std::vector<KGen> gens);

  const RootDatum& datum() const { return *d_; }
  long long characteristic() const { return p_; }

  const std::vector<KSlot>& slots() const { return slots_; }
  const std::vector<KGen>& gens() const { return gens_; }
  int rank() const { return static_cast<int>(gens_.size()); }

  /// Support alcoves (sorted) with their generic ranks.
  std::vector<std::pair<Alcove, int>> support() const;
  int rank_at(const Alcove& a) const;
  /// Half-open slot index range [first, last) of the alcove's block (empty
  /// range with first == last == slots().size() if absent).
  std::pair<int, int> slot_range(const Alcove& a) const;

  /// The shifted object M(n): degrees drop by n, components unchanged.
  KObj shifted(int n) const;

  /// Smallest / largest generator degree (0 for the zero object).
  int min_degree() const;
  int max_degree() const;

  /// Graded rank of the underlying free S-module: sum of v^{-deg g}.
  LaurentPoly grk() const;

  /// The generator-component matrix: rows = slots, columns = generators.
  PolyMat slot_matrix() const;

  /// Structural checks of the representation invariants (homogeneity,
  /// block layout, generic independence).  Throws VerificationFailure.
  void check_shape() const;

 private:
  const RootDatum* d_ = nullptr;
  long long p_ = 0;
  std::vector<KSlot> slots_;
  std::vector<KGen> gens_;
};

/// The skyscraper S_A(shift): one slot over A, one generator, grk v^shift.
KObj make_S_A(const RootDatum& d, long long p, const Alcove& a, int shift = 0);

/// The orbit lattice attached to an integral weight lambda (weight-basis
/// coordinates): tuples over the orbit of the box maximum that are congruent
/// modulo alpha across every alpha-reflection fixing lambda.  Free of rank
/// |W_f| with stalk v^{2 dist(A, A_lambda^-)} at each orbit alcove.
KObj make_Q_lambda(const RootDatum& d, long long p, const Vec2& lambda);

/// M * B_s for the wall s (face index): rank doubles, support widens by the
/// wall crossing, degrees shift by the tensor normalization.
KObj star_bs(const KObj& m, int face);
/// Iterated star product along a word of faces.
KObj star_word(const KObj& m, const std::vector<int>& word);

/// Sections over an up-closed alcove set: the sublattice of elements whose
/// components vanish outside I.  I is interpreted relative to the support.
/// dmax < 0 selects the default degree window; the result is verified to
/// have full generic rank over I (else BoundExceeded).
KObj sections(const KObj& m, const std::set<Alcove>& upper, int dmax = -1);

/// Graded rank of the stalk at A: grk M_I - grk M_{I minus A} for
/// I = support ∩ {>= A}.  Zero for alcoves outside the support.
LaurentPoly stalk_grk(const KObj& m, const Alcove& a, int dmax = -1);

/// All stalks of M, as a character object (engine-side counterpart of the
/// combinatorial stalk recursion).
CharObj kobj_char(const KObj& m, int dmax = -1);

/// A graded morphism M -> N(d), recorded by its generator-image matrix:
/// f(g_i) = sum_j c(j, i) h_j with c(j, i) homogeneous of degree
/// deg g_i + d - deg h_j.
struct KHom {
  int degree = 0;
  PolyMat c;
};

/// k-basis of Hom(M, N(d)) in the ambient category: S-linear maps that are
/// lattice- and grading-preserving, respect the generic decomposition per
/// translation orbit, and satisfy the order condition
/// f(M_A^0) ⊆ ⊕_{A' >= A} N_{A'}^0.
std::vector<KHom> hom_basis(const KObj& m, const KObj& n, int degree);

/// Same, modulo the maps all of whose stalk components vanish (equivalently:
/// all diagonal generic blocks vanish); returns representatives of a k-basis
/// of the quotient.
std::vector<KHom> hom_basis_K(const KObj& m, const KObj& n, int degree);

/// Composition (f after g): c_{fg} = c_f * c_g.
KHom hom_compose(const KHom& f, const KHom& g);
/// Image of m under the morphism into n: a new KObj presenting f(M) is not
/// needed; this applies f to a coefficient vector instead (helper for tests).
std::vector<Poly> hom_apply(const KHom& f, const std::vector<Poly>& coeffs);

/// One indecomposable direct summand with multiplicity.
struct Summand {
  Alcove at;          // minimal support alcove of the summand
  int shift = 0;      // the summand is Q(at)(shift)
  KObj object;        // an explicit realization of the summand
};

/// Krull-Schmidt decomposition of M into indecomposables; summands are
/// returned with deterministic ordering (by minimal alcove, then shift).
std::vector<Summand> split(const KObj& m);

/// The indecomposable object with unit stalk at A and support above A,
/// extracted from the Bott-Samelson cover of A and normalized so that the
/// stalk at A is S (grk 1, no shift).  Results are cached per (datum, p).
KObj indecomposable_Q(const RootDatum& d, long long p, const Alcove& a);

/// Decomposition multiplicities over a finite region: for each A in the
/// region, the row A' -> (graded) stalk of Q(A) at A', evaluated at v = 1.
std::map<Alcove, std::map<Alcove, long long>> multiplicity_table(
    const RootDatum& d, long long p, const std::vector<Alcove>& region);

/// Graded version of one table row: A' -> stalk grk of Q(A).
std::map<Alcove, LaurentPoly> multiplicity_row(const RootDatum& d, long long p,
                                               const Alcove& a);

}  // namespace alcalc
