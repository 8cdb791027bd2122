#include "alcalc/polysys.hpp"

#include <stdexcept>
#include <utility>

namespace alcalc {

PolyMat::PolyMat(int rows, int cols, long long p)
    : rows_(rows), cols_(cols), p_(p),
      e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly::zero(p)) {}

PolyMat PolyMat::identity(int n, long long p) {
  PolyMat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(Fk::one(p));
  return m;
}

Poly& PolyMat::at(int i, int j) {
  return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

const Poly& PolyMat::at(int i, int j) const {
  return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
  if (cols_ != o.rows_) throw std::logic_error("PolyMat: dimension mismatch in product");
  PolyMat r(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Poly& f = at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += f * o.at(k, j);
      }
    }
  return r;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("PolyMat: shape mismatch");
  PolyMat r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
  return r;
}

PolyMat PolyMat::operator-(const PolyMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("PolyMat: shape mismatch");
  PolyMat r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
  return r;
}

PolyMat PolyMat::scaled(const Poly& f) const {
  PolyMat r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = r.at(i, j) * f;
  return r;
}

bool PolyMat::operator==(const PolyMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(at(i, j) == o.at(i, j))) return false;
  return true;
}

bool PolyMat::is_zero() const {
  for (const Poly& f : e_)
    if (!f.is_zero()) return false;
  return true;
}

Poly poly_divexact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::logic_error("poly_divexact: division by zero");
  long long p = f.characteristic() ? f.characteristic() : g.characteristic();
  if (f.is_zero()) return Poly::zero(p);
  if (g.is_constant()) return f.scaled(Fk::one(p) / g.constant_term());
  Poly r = f;
  Poly q = Poly::zero(p);
  const auto glt = *g.terms().rbegin();  // leading term w.r.t. lex order
  while (!r.is_zero()) {
    const auto rlt = *r.terms().rbegin();
    Expo e{rlt.first[0] - glt.first[0], rlt.first[1] - glt.first[1]};
    if (e[0] < 0 || e[1] < 0) throw std::logic_error("poly_divexact: not divisible");
    Poly t = Poly::monomial(e, rlt.second / glt.second);
    q += t;
    r -= t * g;
  }
  return q;
}

namespace {

// Forward fraction-free (Bareiss) elimination in place.  Returns the list of
// pivot columns and the sign of the row permutation; on return the matrix is
// upper "staircase" triangular with pivot k at (k, pivcols[k]).
struct Forward {
  std::vector<int> pivcols;
  int sign = 1;
};

Forward bareiss_forward(PolyMat& a) {
  Forward fw;
  const int m = a.rows(), n = a.cols();
  Poly prev = Poly::constant(Fk::one(a.characteristic()));
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (!a.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(row, j));
      fw.sign = -fw.sign;
    }
    for (int i = row + 1; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        a.at(i, j) = poly_divexact(a.at(row, col) * a.at(i, j) - a.at(i, col) * a.at(row, j), prev);
      }
      a.at(i, col) = Poly::zero(a.characteristic());
    }
    prev = a.at(row, col);
    fw.pivcols.push_back(col);
    ++row;
  }
  return fw;
}

}  // namespace

int poly_rank(const PolyMat& a) {
  PolyMat w = a;
  return static_cast<int>(bareiss_forward(w).pivcols.size());
}

Poly poly_det(const PolyMat& a) {
  if (a.rows() != a.cols()) throw std::logic_error("poly_det: not square");
  const long long p = a.characteristic();
  if (a.rows() == 0) return Poly::constant(Fk::one(p));
  PolyMat w = a;
  Forward fw = bareiss_forward(w);
  if (static_cast<int>(fw.pivcols.size()) < a.rows()) return Poly::zero(p);
  Poly d = w.at(a.rows() - 1, a.cols() - 1);  // final Bareiss pivot is det(PA)
  return fw.sign < 0 ? -d : d;
}

AdjResult poly_adjugate(const PolyMat& g) {
  if (g.rows() != g.cols()) throw std::logic_error("poly_adjugate: not square");
  const int n = g.rows();
  const long long p = g.characteristic();
  if (n == 0) return {PolyMat(0, 0, p), Poly::constant(Fk::one(p))};

  // Fraction-free Gauss-Jordan on [g | I]: every update divides exactly by
  // the previous pivot, and the sweep ends with [det(Pg)*I | det(Pg)*(Pg)^{-1}].
  PolyMat a(n, 2 * n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a.at(i, j) = g.at(i, j);
    a.at(i, n + i) = Poly::constant(Fk::one(p));
  }
  int sign = 1;
  Poly prev = Poly::constant(Fk::one(p));
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, k).is_zero()) { piv = i; break; }
    if (piv < 0) throw std::logic_error("poly_adjugate: singular matrix");
    if (piv != k) {
      for (int j = 0; j < 2 * n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      sign = -sign;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a.at(i, j) = poly_divexact(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
      }
      a.at(i, k) = Poly::zero(p);
    }
    prev = a.at(k, k);
  }
  // Rescale rows: after the sweep row i has pivot a(i,i); all equal det(Pg)
  // by the fraction-free Gauss-Jordan invariant except possibly stale earlier
  // pivots, so normalize each row to the final pivot via exact division.
  Poly dperm = a.at(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    if (a.at(i, i) == dperm) continue;
    for (int j = n; j < 2 * n; ++j)
      a.at(i, j) = poly_divexact(a.at(i, j) * dperm, a.at(i, i));
  }
  // The augmented block accumulated every row operation (swaps included), so
  // it now holds R with R*g = dperm*I, i.e. R = dperm * g^{-1}.  With
  // det(g) = sign * dperm this gives adj(g) = det(g) * g^{-1} = sign * R.
  AdjResult res{PolyMat(n, n, p), Poly()};
  res.det = sign < 0 ? -dperm : dperm;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly v = a.at(i, n + j);
      res.adj.at(i, j) = sign < 0 ? -v : v;
    }
  return res;
}

}  // namespace alcalc
