#include "alcalc/poly.hpp"

#include <algorithm>
#include <cassert>

#include "alcalc/errors.hpp"

namespace alcalc {

Poly Poly::zero(long long p) {
  Poly f;
  f.p_ = p;
  return f;
}

Poly Poly::constant(const Fk& c) {
  Poly f;
  f.p_ = c.characteristic();
  f.put({0, 0}, c);
  return f;
}

Poly Poly::var(int i, long long p) {
  assert(i == 0 || i == 1);
  Poly f;
  f.p_ = p;
  Expo e{0, 0};
  e[i] = 1;
  f.put(e, Fk::one(p));
  return f;
}

Poly Poly::linear(const Vec2& w, long long p) {
  Poly f;
  f.p_ = p;
  f.put({1, 0}, Fk::of(w[0], p));
  f.put({0, 1}, Fk::of(w[1], p));
  return f;
}

Poly Poly::monomial(const Expo& e, const Fk& c) {
  Poly f;
  f.p_ = c.characteristic();
  f.put(e, c);
  return f;
}

Fk Poly::constant_term() const { return coeff({0, 0}); }

Fk Poly::coeff(const Expo& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Fk::zero(p_) : it->second;
}

int Poly::degree() const {
  int deg = -1;
  for (auto& [e, c] : t_) deg = std::max(deg, 2 * (e[0] + e[1]));
  return deg;
}

bool Poly::is_homogeneous() const {
  int deg = -2;
  for (auto& [e, c] : t_) {
    int d = 2 * (e[0] + e[1]);
    if (deg == -2) deg = d;
    if (d != deg) return false;
  }
  return true;
}

Poly Poly::homogeneous_part(int sdeg) const {
  Poly out = Poly::zero(p_);
  for (auto& [e, c] : t_)
    if (2 * (e[0] + e[1]) == sdeg) out.t_.emplace(e, c);
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.t_) c = -c;
  return out;
}

void Poly::put(const Expo& e, const Fk& c) {
  auto it = t_.find(e);
  if (it == t_.end()) {
    if (!c.is_zero()) t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

void Poly::adopt(const Poly& o) {
  if (t_.empty() && p_ == 0) p_ = o.p_;
  assert(p_ == o.p_ || (o.t_.empty() && o.p_ == 0));
}

Poly& Poly::operator+=(const Poly& o) {
  adopt(o);
  for (auto& [e, c] : o.t_) put(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  adopt(o);
  for (auto& [e, c] : o.t_) put(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out = Poly::zero(a.t_.empty() && a.p_ == 0 ? b.p_ : a.p_);
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_)
      out.put({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  return out;
}

Poly Poly::scaled(const Fk& c) const {
  if (c.is_zero()) return Poly::zero(p_);
  Poly out = *this;
  for (auto& [e, k] : out.t_) k *= c;
  return out;
}

std::string Poly::str(const std::vector<std::string>& vars) const {
  if (t_.empty()) return "0";
  std::string out;
  // Highest total degree first, then lexicographic.
  std::vector<std::pair<Expo, Fk>> ts(t_.begin(), t_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1], db = b.first[0] + b.first[1];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (auto& [e, c] : ts) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < 2; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(vars.size()) ? vars[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += mono;
    }
  }
  return out;
}

Poly root_poly(const RootDatum& d, int pos_root, long long p) {
  return Poly::linear(d.alpha(pos_root).vec, p);
}

Poly weyl_act(const RootDatum& d, int w, const Poly& f) {
  long long p = f.characteristic();
  Poly images[2] = {Poly::linear(d.act(w, Vec2{1, 0}), p),
                    Poly::linear(d.act(w, Vec2{0, 1}), p)};
  // Cache powers of the variable images up to the needed exponent.
  int max_e[2] = {0, 0};
  for (auto& [e, c] : f.terms()) {
    max_e[0] = std::max(max_e[0], e[0]);
    max_e[1] = std::max(max_e[1], e[1]);
  }
  std::vector<Poly> pow[2];
  for (int i = 0; i < 2; ++i) {
    pow[i].push_back(Poly::constant(Fk::one(p)));
    for (int k = 1; k <= max_e[i]; ++k) pow[i].push_back(pow[i].back() * images[i]);
  }
  Poly out = Poly::zero(p);
  for (auto& [e, c] : f.terms()) out += (pow[0][e[0]] * pow[1][e[1]]).scaled(c);
  return out;
}

void divmod_root(const RootDatum& d, int pos_root, const Poly& f, Poly& q, Poly& r) {
  long long p = f.characteristic();
  const Vec2& av = d.alpha(pos_root).vec;
  Fk c0 = Fk::of(av[0], p), c1 = Fk::of(av[1], p);
  int j;
  Fk lead;
  if (!c0.is_zero()) {
    j = 0;
    lead = c0;
  } else if (!c1.is_zero()) {
    j = 1;
    lead = c1;
  } else {
    throw GkmViolation("positive root vanishes over the coefficient field");
  }
  Poly alpha = root_poly(d, pos_root, p);
  q = Poly::zero(p);
  r = f;
  for (;;) {
    // Pick the term with the largest pivot exponent; each elimination step
    // strictly lowers it, so this terminates.
    const Expo* best = nullptr;
    Fk bc;
    for (auto& [e, c] : r.terms()) {
      if (e[j] < 1) continue;
      if (!best || e[j] > (*best)[j] || (e[j] == (*best)[j] && e > *best)) {
        best = &e;
        bc = c;
      }
    }
    if (!best) break;
    Expo te = *best;
    te[j] -= 1;
    Poly t = Poly::monomial(te, bc / lead);
    q += t;
    r -= t * alpha;
  }
}

bool divides_root(const RootDatum& d, int pos_root, const Poly& f) {
  Poly q, r;
  divmod_root(d, pos_root, f, q, r);
  return r.is_zero();
}

Poly divide_exact(const RootDatum& d, int pos_root, const Poly& f) {
  Poly q, r;
  divmod_root(d, pos_root, f, q, r);
  if (!r.is_zero())
    throw NotDivisible("polynomial is not divisible by the requested root");
  return q;
}

bool congruent_mod_root(const RootDatum& d, const Poly& f, const Poly& g, int pos_root) {
  Poly q, r;
  divmod_root(d, pos_root, f - g, q, r);
  return r.is_zero();
}

} // namespace alcalc
