#include "alcalc/rootfrac.hpp"

#include <algorithm>
#include <cassert>

#include "alcalc/errors.hpp"

namespace alcalc {

RootFraction::RootFraction(const RootDatum& d, Poly num)
    : d_(&d), num_(std::move(num)), den_(d.num_positive(), 0) {}

RootFraction::RootFraction(const RootDatum& d, Poly num, std::vector<int> den)
    : d_(&d), num_(std::move(num)), den_(std::move(den)) {
  assert(den_.size() == static_cast<size_t>(d.num_positive()));
  for (int m : den_) assert(m >= 0);
  canonicalize();
}

RootFraction RootFraction::zero(const RootDatum& d, long long p) {
  return RootFraction(d, Poly::zero(p));
}

RootFraction RootFraction::one(const RootDatum& d, long long p) {
  return RootFraction(d, Poly::constant(Fk::one(p)));
}

bool RootFraction::is_polynomial() const {
  for (int m : den_)
    if (m != 0) return false;
  return true;
}

bool RootFraction::regular_at(int pos_root) const {
  return den_.empty() || den_[pos_root] == 0;
}

Poly RootFraction::as_poly() const {
  if (!is_polynomial())
    throw NotDivisible("fraction has a nontrivial root denominator");
  return num_;
}

int RootFraction::degree() const {
  if (num_.is_zero()) return -1;
  int deg = num_.degree();
  for (int m : den_) deg -= 2 * m;
  return deg;
}

void RootFraction::canonicalize() {
  if (num_.is_zero()) {
    std::fill(den_.begin(), den_.end(), 0);
    return;
  }
  for (int i = 0; i < static_cast<int>(den_.size()); ++i) {
    while (den_[i] > 0) {
      Poly q, r;
      divmod_root(*d_, i, num_, q, r);
      if (!r.is_zero()) break;
      num_ = q;
      --den_[i];
    }
  }
}

void RootFraction::adopt(const RootFraction& o) {
  if (!d_) {
    assert(num_.is_zero());
    d_ = o.d_;
    den_.assign(o.den_.size(), 0);
    num_ = Poly::zero(o.characteristic());
  }
  assert(d_ == o.d_ || o.d_ == nullptr);
}

RootFraction RootFraction::operator-() const {
  RootFraction out = *this;
  out.num_ = -out.num_;
  return out;
}

RootFraction& RootFraction::operator+=(const RootFraction& o) {
  if (o.d_ == nullptr) return *this; // zero of unknown datum
  adopt(o);
  // Common denominator: pointwise max of exponents.
  Poly a = num_, b = o.num_;
  long long p = num_.characteristic();
  if (num_.is_zero() && p == 0) p = o.characteristic();
  std::vector<int> den(den_.size());
  for (size_t i = 0; i < den_.size(); ++i) {
    den[i] = std::max(den_[i], o.den_[i]);
    Poly alpha = root_poly(*d_, static_cast<int>(i), p);
    for (int k = den_[i]; k < den[i]; ++k) a = a * alpha;
    for (int k = o.den_[i]; k < den[i]; ++k) b = b * alpha;
  }
  num_ = a + b;
  den_ = den;
  canonicalize();
  return *this;
}

RootFraction& RootFraction::operator-=(const RootFraction& o) { return *this += -o; }

RootFraction operator*(const RootFraction& a, const RootFraction& b) {
  if (a.d_ == nullptr) return a.num_.is_zero() && b.d_ ? RootFraction::zero(*b.d_, b.characteristic()) : a;
  if (b.d_ == nullptr) return RootFraction::zero(*a.d_, a.characteristic());
  assert(a.d_ == b.d_);
  std::vector<int> den(a.den_.size());
  for (size_t i = 0; i < den.size(); ++i) den[i] = a.den_[i] + b.den_[i];
  return RootFraction(*a.d_, a.num_ * b.num_, den);
}

RootFraction RootFraction::scaled(const Fk& c) const {
  RootFraction out = *this;
  out.num_ = out.num_.scaled(c);
  if (out.num_.is_zero()) std::fill(out.den_.begin(), out.den_.end(), 0);
  return out;
}

RootFraction RootFraction::times(const Poly& g) const {
  assert(d_);
  RootFraction out(*d_, num_ * g, den_);
  return out;
}

RootFraction RootFraction::root_shift(int pos_root, int m) const {
  assert(d_);
  if (m == 0 || num_.is_zero()) return *this;
  if (m < 0) {
    Poly n = num_;
    Poly alpha = root_poly(*d_, pos_root, num_.characteristic());
    for (int k = 0; k < -m; ++k) n = n * alpha;
    return RootFraction(*d_, n, den_);
  }
  std::vector<int> den = den_;
  den[pos_root] += m;
  return RootFraction(*d_, num_, den);
}

bool RootFraction::operator==(const RootFraction& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return num_ == o.num_ && den_ == o.den_;
}

std::string RootFraction::str() const {
  if (!d_ || num_.is_zero()) return "0";
  std::string out = "(" + num_.str(d_->var_names()) + ")";
  std::string den;
  for (size_t i = 0; i < den_.size(); ++i) {
    if (den_[i] == 0) continue;
    if (!den.empty()) den += "*";
    den += "(" + root_poly(*d_, static_cast<int>(i), num_.characteristic()).str(d_->var_names()) + ")";
    if (den_[i] > 1) den += "^" + std::to_string(den_[i]);
  }
  return den.empty() ? out : out + "/" + den;
}

RootFraction weyl_act(const RootDatum& d, int w, const RootFraction& f) {
  if (f.is_zero()) return f;
  Poly num = weyl_act(d, w, f.num());
  std::vector<int> den(f.den().size(), 0);
  int sign = 1;
  for (size_t i = 0; i < den.size(); ++i) {
    int m = f.den()[i];
    if (m == 0) continue;
    auto [j, s] = d.weyl()[w].pos_image[i];
    den[j] += m;
    if (s < 0 && m % 2 == 1) sign = -sign;
  }
  if (sign < 0) num = -num;
  return RootFraction(d, std::move(num), std::move(den));
}

} // namespace alcalc
