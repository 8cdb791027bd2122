#pragma once

// Shared degreewise solving machinery for lattice constructions: scanning a
// degree window, solving the k-linear constraints of each degree, and keeping
// the solutions that are new modulo the S-span of earlier ones.

#include <functional>
#include <vector>

#include "alcalc/field.hpp"
#include "alcalc/kobj.hpp"

namespace alcalc {
namespace detail {

/// Monomial exponents of the given S-degree (every variable has degree 2) in
/// `rank` variables, in lexicographic order; empty for negative or odd input.
std::vector<Expo> monos_of_sdeg(int rank, int sdeg);

/// Incrementally reduced k-span of coordinate vectors.
class Span {
 public:
  explicit Span(long long p) : p_(p) {}
  /// Reduce v against the span; absorb and return true if independent.
  bool add(std::vector<Fk> v);
  int dim() const { return static_cast<int>(rows_.size()); }
  /// The reduced rows held so far (echelon form, unit pivots).
  const std::vector<std::vector<Fk>>& rows() const { return rows_; }

 private:
  long long p_;
  std::vector<std::vector<Fk>> rows_;
  std::vector<int> piv_;
};

/// A generator found by the scan: its degree, its coefficients with respect
/// to the host basis, and its slot components.
struct FoundGen {
  int degree = 0;
  std::vector<Poly> coeff;
  std::vector<Poly> comp;
};

/// Emit the k-values that must vanish for a candidate element of degree t,
/// given its coefficient polynomials (per host generator) and its slot
/// components.  The number of values must depend only on t.
using ConstraintFn = std::function<void(int t, const std::vector<Poly>& coeff,
                                        const std::vector<Poly>& comp,
                                        std::vector<Fk>& out)>;

/// All homogeneous elements of the host lattice in degrees [t_lo, t_hi]
/// satisfying the constraints, modulo the S-span of earlier finds.
/// When `expected` >= 0, the scan ends early once that many generators have
/// been found and `grace` further degrees produced nothing new (honest
/// lattices in this module are degreewise saturated, so reaching the
/// expected rank certifies the basis; the grace window guards corrupted
/// inputs fed to the validator).
std::vector<FoundGen> solve_degreewise(const KObj& host, const ConstraintFn& cons,
                                       int t_lo, int t_hi, int expected = -1,
                                       int grace = 0);

/// Default extra degree window: twice (word-length estimate + |W_f|), the
/// documented saturation bound.
int default_window(const KObj& m);

/// Order of the finite Weyl group of the datum.
int wf_order(const RootDatum& d);

/// Present a sublattice spanned by `gens` (components in the ambient slots)
/// in exact fiber coordinates: per alcove block, keep a row subset realizing
/// the generic rank and drop alcoves where the block vanishes.
KObj compress_fibers(const RootDatum& d, long long p, const std::vector<KSlot>& slots,
                     const std::vector<FoundGen>& gens);

}  // namespace detail
}  // namespace alcalc
