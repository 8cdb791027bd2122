#pragma once

// Dense matrices over the polynomial ring S and fraction-free elimination.
//
// Entries are multivariate polynomials (Poly).  All elimination routines use
// the Bareiss scheme, so every intermediate entry is a minor of the input
// matrix and every division is exact in S.  This gives exact ranks,
// determinants and adjugates over the fraction field without ever leaving
// the polynomial ring.

#include <vector>

#include "alcalc/poly.hpp"

namespace alcalc {

class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(int rows, int cols, long long p);

  static PolyMat identity(int n, long long p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long characteristic() const { return p_; }

  Poly& at(int i, int j);
  const Poly& at(int i, int j) const;

  PolyMat operator*(const PolyMat& o) const;
  PolyMat operator+(const PolyMat& o) const;
  PolyMat operator-(const PolyMat& o) const;
  PolyMat scaled(const Poly& f) const;
  bool operator==(const PolyMat& o) const;
  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  long long p_ = 0;
  std::vector<Poly> e_;
};

// Exact quotient f/g in S.  Throws std::logic_error when g does not divide f
// (callers only use this where divisibility is guaranteed by the algorithm).
Poly poly_divexact(const Poly& f, const Poly& g);

// Rank of a over Frac(S), by fraction-free Gaussian elimination.
int poly_rank(const PolyMat& a);

// Determinant of a square matrix, fraction-free.
Poly poly_det(const PolyMat& a);

// Adjugate and determinant of a square matrix: g * adj == det * Id.
// Computed by a fraction-free Gauss-Jordan sweep; throws std::logic_error if
// the matrix is singular (our callers require invertibility over Frac(S)).
struct AdjResult {
  PolyMat adj;
  Poly det;
};
AdjResult poly_adjugate(const PolyMat& g);

}  // namespace alcalc
