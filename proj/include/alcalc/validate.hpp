#pragma once

// Structural validators for graded lattice objects.
//
// Four independent checks, each returning a verdict with a human-readable
// witness on failure:
//
//   * section gluing: sections over a union of up-closed sets are the sum
//     of the sections over the parts (checked degreewise up to the top
//     generator degree, which is exact: the quotient is generated there);
//   * local decomposition: after inverting all roots except one, the object
//     decomposes along the reflection-translation orbits of that root --
//     verified exactly through root-adic valuations of the generic
//     coordinates of every generator's orbit projection;
//   * standard filtration: peeling minimal support alcoves one at a time
//     telescopes the graded rank into stalk graded ranks with nonnegative
//     coefficients;
//   * section triples: for nested up-closed sets, the sub/quotient triple
//     is exact on stalks (graded-rank bookkeeping per alcove plus the
//     global rank identity).
//
// The gluing and triple checks sample closed sets: all principal up-sets,
// the full support, and unions of incomparable principal pairs, capped by
// ValidateOptions.  Within each sampled instance the verification is exact.

#include <string>
#include <vector>

#include "alcalc/kobj.hpp"

namespace alcalc {

struct CheckResult {
  std::string name;
  bool ok = true;
  int instances = 0;    // how many sampled instances were verified
  std::string witness;  // first failure, empty when ok
};

struct ValidateOptions {
  /// Cap on sampled closed-set instances for the gluing and triple checks.
  int max_instances = 24;
};

/// Property: M_{I1 ∪ I2} = M_{I1} + M_{I2} for up-closed I1, I2.
CheckResult check_sections_glue(const KObj& m, const ValidateOptions& opt = {});

/// Property: for every positive root, the object localized away from that
/// root splits along the root's reflection-translation orbits of alcoves.
CheckResult check_local_decomposition(const KObj& m);

/// Property: successive section quotients along any chain of up-closed sets
/// with singleton steps are graded free with the stalk graded ranks.
CheckResult check_standard_filtration(const KObj& m);

/// Property: for up-closed J ⊆ I, the triple  M_J → M_I → M_I/M_J  is exact
/// on stalks.
CheckResult check_section_triples(const KObj& m, const ValidateOptions& opt = {});

/// All four checks in the order above (shape invariants are asserted first).
std::vector<CheckResult> validate(const KObj& m, const ValidateOptions& opt = {});

}  // namespace alcalc
