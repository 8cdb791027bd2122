#pragma once

#include <optional>
#include <vector>

#include "alcalc/field.hpp"

namespace alcalc {

/// Dense matrix over the exact field of a fixed characteristic.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols, long long p)
      : rows_(rows), cols_(cols), p_(p), e_(static_cast<size_t>(rows) * cols, Fk::zero(p)) {}

  static Mat identity(int n, long long p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long characteristic() const { return p_; }

  Fk& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Fk& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Fk& c) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool is_zero() const;

private:
  int rows_ = 0, cols_ = 0;
  long long p_ = 0;
  std::vector<Fk> e_;
};

/// Result of Gauss-Jordan elimination.
struct Rref {
  Mat r;
  std::vector<int> pivots; // pivot column of each pivot row, ascending
  int rank = 0;
};

/// Reduced row-echelon form with first-nonzero pivoting; the parallel and
/// serial paths make identical pivot choices and return identical results.
Rref rref(const Mat& a);
/// Serial reference implementation (kept for testing and benchmarking).
Rref rref_serial(const Mat& a);

/// Basis of the right kernel {x : Ax = 0}.
std::vector<std::vector<Fk>> kernel_basis(const Mat& a);

/// One solution of Ax = b, if any.
std::optional<std::vector<Fk>> solve(const Mat& a, const std::vector<Fk>& b);

/// Rank of the matrix.
int rank_of(const Mat& a);

std::vector<Fk> mat_apply(const Mat& a, const std::vector<Fk>& x);

} // namespace alcalc
