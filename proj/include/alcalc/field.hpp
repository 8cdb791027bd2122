#pragma once

#include <cassert>
#include <string>

#include <gmpxx.h>

namespace alcalc {

/// Exact field scalar, tagged at runtime by the characteristic.
///
/// p == 0 selects the rationals (GMP-backed, arbitrary precision);
/// p > 0 selects the prime field F_p with residues stored in [0, p).
/// Mixing scalars of different characteristic is a programming error and
/// asserts.  The characteristic is carried per scalar so that values can be
/// stored in generic containers (polynomials, matrices) without threading a
/// field context everywhere.
class Fk {
public:
  Fk() = default;

  /// The integer n in the field of characteristic p.
  static Fk of(long long n, long long p) {
    Fk x;
    x.p_ = p;
    if (p == 0) {
      x.q_ = mpq_class(static_cast<long>(n));
    } else {
      x.r_ = n % p;
      if (x.r_ < 0) x.r_ += p;
    }
    return x;
  }

  /// The rational a/b in characteristic p (b must be invertible).
  static Fk ratio(long long a, long long b, long long p) {
    return of(a, p) / of(b, p);
  }

  static Fk zero(long long p) { return of(0, p); }
  static Fk one(long long p) { return of(1, p); }

  long long characteristic() const { return p_; }
  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  /// Residue accessor (p > 0 only).
  long long residue() const {
    assert(p_ > 0);
    return r_;
  }
  /// Rational accessor (p == 0 only).
  const mpq_class& rational() const {
    assert(p_ == 0);
    return q_;
  }

  Fk operator-() const {
    Fk x = *this;
    if (p_ == 0) {
      x.q_ = -q_;
    } else if (r_ != 0) {
      x.r_ = p_ - r_;
    }
    return x;
  }

  Fk& operator+=(const Fk& o) {
    match(o);
    if (p_ == 0) {
      q_ += o.q_;
    } else {
      r_ = (r_ + o.r_) % p_;
    }
    return *this;
  }

  Fk& operator-=(const Fk& o) {
    match(o);
    if (p_ == 0) {
      q_ -= o.q_;
    } else {
      r_ = (r_ - o.r_ + p_) % p_;
    }
    return *this;
  }

  Fk& operator*=(const Fk& o) {
    match(o);
    if (p_ == 0) {
      q_ *= o.q_;
    } else {
      r_ = mulmod(r_, o.r_, p_);
    }
    return *this;
  }

  Fk& operator/=(const Fk& o) { return *this *= o.inv(); }

  friend Fk operator+(Fk a, const Fk& b) { return a += b; }
  friend Fk operator-(Fk a, const Fk& b) { return a -= b; }
  friend Fk operator*(Fk a, const Fk& b) { return a *= b; }
  friend Fk operator/(Fk a, const Fk& b) { return a /= b; }

  /// Multiplicative inverse; asserts on zero.
  Fk inv() const {
    Fk x = *this;
    if (p_ == 0) {
      assert(q_ != 0);
      x.q_ = 1 / q_;
    } else {
      assert(r_ != 0);
      x.r_ = invmod(r_, p_);
    }
    return x;
  }

  bool operator==(const Fk& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
  }
  bool operator!=(const Fk& o) const { return !(*this == o); }

  std::string str() const {
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
  }

private:
  void match(const Fk& o) {
    // Zero-valued default-constructed scalars adopt the other operand's field.
    if (p_ != o.p_) {
      assert((p_ == 0 && q_ == 0 && r_ == 0) || (o.p_ == 0 && o.q_ == 0 && o.r_ == 0));
      if (p_ == 0 && q_ == 0) {
        p_ = o.p_;
      }
    }
  }

  static long long mulmod(long long a, long long b, long long p) {
    return static_cast<long long>(
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
        static_cast<unsigned __int128>(p));
  }

  static long long invmod(long long a, long long p) {
    // Extended Euclid; p prime, a != 0 mod p.
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    assert(r == 1 && "invmod of non-unit");
    return t < 0 ? t + p : t;
  }

  long long p_ = 0;
  long long r_ = 0;
  mpq_class q_;
};

} // namespace alcalc
