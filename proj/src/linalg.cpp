#include "alcalc/linalg.hpp"

#include <cassert>

namespace alcalc {

Mat Mat::identity(int n, long long p) {
  Mat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = Fk::one(p);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat out(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Fk& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat out = *this;
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat out = *this;
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

Mat Mat::scaled(const Fk& c) const {
  Mat out = *this;
  for (auto& x : out.e_) x *= c;
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Mat::is_zero() const {
  for (auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

/// Gauss-Jordan core.  Pivot choice (first row with a nonzero entry in the
/// current column) is independent of `parallel`, and the row updates are
/// independent of each other, so both paths produce identical output.
Rref rref_impl(const Mat& a, bool parallel) {
  Rref out{a, {}, 0};
  Mat& r = out.r;
  const int m = r.rows(), n = r.cols();
  int pr = 0;
  for (int c = 0; c < n && pr < m; ++c) {
    int piv = -1;
    for (int i = pr; i < m; ++i)
      if (!r.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != pr)
      for (int j = c; j < n; ++j) std::swap(r.at(piv, j), r.at(pr, j));
    Fk inv = r.at(pr, c).inv();
    for (int j = c; j < n; ++j) r.at(pr, j) *= inv;

#ifdef ALCALC_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel && m > 32)
#endif
    for (int i = 0; i < m; ++i) {
      if (i == pr) continue;
      Fk f = r.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < n; ++j) r.at(i, j) -= f * r.at(pr, j);
    }
    (void)parallel;
    out.pivots.push_back(c);
    ++pr;
  }
  out.rank = pr;
  return out;
}

} // namespace

Rref rref(const Mat& a) { return rref_impl(a, true); }
Rref rref_serial(const Mat& a) { return rref_impl(a, false); }

std::vector<std::vector<Fk>> kernel_basis(const Mat& a) {
  Rref rr = rref(a);
  const int n = a.cols();
  long long p = a.characteristic();
  std::vector<bool> is_pivot(n, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<std::vector<Fk>> out;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Fk> v(n, Fk::zero(p));
    v[f] = Fk::one(p);
    for (int k = 0; k < rr.rank; ++k) v[rr.pivots[k]] = -rr.r.at(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Fk>> solve(const Mat& a, const std::vector<Fk>& b) {
  assert(static_cast<int>(b.size()) == a.rows());
  long long p = a.characteristic();
  Mat ext(a.rows(), a.cols() + 1, p);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) ext.at(i, j) = a.at(i, j);
    ext.at(i, a.cols()) = b[i];
  }
  Rref rr = rref(ext);
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  std::vector<Fk> x(a.cols(), Fk::zero(p));
  for (int k = 0; k < rr.rank; ++k) x[rr.pivots[k]] = rr.r.at(k, a.cols());
  return x;
}

int rank_of(const Mat& a) { return rref(a).rank; }

std::vector<Fk> mat_apply(const Mat& a, const std::vector<Fk>& x) {
  assert(static_cast<int>(x.size()) == a.cols());
  std::vector<Fk> out(a.rows(), Fk::zero(a.characteristic()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
  return out;
}

} // namespace alcalc
