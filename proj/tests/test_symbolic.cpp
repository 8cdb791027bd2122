#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alcalc/errors.hpp"
#include "alcalc/reval.hpp"
#include "alcalc/rootfrac.hpp"

using namespace alcalc;

namespace {

const DatumName kAll[] = {DatumName::A1, DatumName::A1xA1, DatumName::A2,
                          DatumName::B2, DatumName::G2};

/// Characteristics admitted for a datum: 0 plus odd primes passing the
/// independence check.
std::vector<long long> good_chars(const RootDatum& d) {
  std::vector<long long> out = {0};
  for (long long p : {3, 5, 7})
    if (d.gkm_check(p).ok) out.push_back(p);
  return out;
}

Poly random_poly(std::mt19937_64& rng, const RootDatum& d, long long p, int max_exp = 2) {
  Poly f = Poly::zero(p);
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    Expo e{static_cast<int>(rng() % (max_exp + 1)), 0};
    if (d.rank() == 2) e[1] = static_cast<int>(rng() % (max_exp + 1));
    f += Poly::monomial(e, Fk::of(static_cast<long long>(rng() % 9) - 4, p));
  }
  return f;
}

RootFraction random_fraction(std::mt19937_64& rng, const RootDatum& d, long long p) {
  std::vector<int> den(d.num_positive(), 0);
  for (int i = 0; i < d.num_positive(); ++i) den[i] = static_cast<int>(rng() % 2);
  return RootFraction(d, random_poly(rng, d, p), den);
}

} // namespace

TEST_CASE("polynomial ring arithmetic") {
  long long p = 0;
  Poly x = Poly::var(0, p), y = Poly::var(1, p);
  Poly f = (x + y) * (x + y);
  Poly expect = x * x + (x * y).scaled(Fk::of(2, p)) + y * y;
  CHECK(f == expect);
  CHECK(f.degree() == 4);
  CHECK(f.is_homogeneous());

  Poly g = x * x + x.scaled(Fk::of(3, p));
  CHECK(!g.is_homogeneous());
  CHECK(g.homogeneous_part(4) == x * x);
  CHECK(g.homogeneous_part(2) == x.scaled(Fk::of(3, p)));
  CHECK(g.homogeneous_part(0).is_zero());
  CHECK(g.coeff({1, 0}) == Fk::of(3, p));
  CHECK((g - g).is_zero());
}

TEST_CASE("prime-field polynomials satisfy the Frobenius identity") {
  for (long long p : {3, 5, 7}) {
    Poly x = Poly::var(0, p), y = Poly::var(1, p);
    Poly s = x + y;
    Poly pw = Poly::constant(Fk::one(p));
    for (int i = 0; i < p; ++i) pw = pw * s;
    Poly expect = Poly::zero(p);
    Expo e0{static_cast<int>(p), 0}, e1{0, static_cast<int>(p)};
    expect += Poly::monomial(e0, Fk::one(p));
    expect += Poly::monomial(e1, Fk::one(p));
    CHECK(pw == expect);
  }
}

TEST_CASE("degree is additive on products") {
  std::mt19937_64 rng(11);
  for (DatumName n : kAll) {
    const RootDatum& d = RootDatum::get(n);
    for (int t = 0; t < 20; ++t) {
      Poly f = random_poly(rng, d, 0), g = random_poly(rng, d, 0);
      if (f.is_zero() || g.is_zero()) continue;
      CHECK((f * g).degree() == f.degree() + g.degree());
    }
  }
}

TEST_CASE("string rendering") {
  long long p = 0;
  const RootDatum& d = RootDatum::get(DatumName::A2);
  Poly x = Poly::var(0, p), y = Poly::var(1, p);
  Poly f = x * x - y.scaled(Fk::of(2, p)) + Poly::constant(Fk::one(p));
  CHECK(f.str(d.var_names()) == d.var_names()[0] + "^2 - 2*" + d.var_names()[1] + " + 1");
  CHECK(Poly::zero(p).str(d.var_names()) == "0");
}

TEST_CASE("finite Weyl action on polynomials") {
  std::mt19937_64 rng(12);
  for (DatumName n : kAll) {
    const RootDatum& d = RootDatum::get(n);
    for (long long p : good_chars(d)) {
      // s_alpha(alpha) = -alpha for every positive root.
      for (int i = 0; i < d.num_positive(); ++i) {
        Poly a = root_poly(d, i, p);
        CHECK(weyl_act(d, d.reflection(i), a) == -a);
      }
      // Automorphism and group-action laws on random elements.
      for (int t = 0; t < 10; ++t) {
        Poly f = random_poly(rng, d, p), g = random_poly(rng, d, p);
        int w1 = static_cast<int>(rng() % d.weyl_order());
        int w2 = static_cast<int>(rng() % d.weyl_order());
        CHECK(weyl_act(d, w1, f * g) == weyl_act(d, w1, f) * weyl_act(d, w1, g));
        CHECK(weyl_act(d, w1, f + g) == weyl_act(d, w1, f) + weyl_act(d, w1, g));
        CHECK(weyl_act(d, w1, weyl_act(d, w2, f)) == weyl_act(d, d.w_mul(w1, w2), f));
        CHECK(weyl_act(d, 0, f) == f);
      }
    }
  }
  // Rank 1: the reflection negates the weight coordinate.
  const RootDatum& a1 = RootDatum::get(DatumName::A1);
  Poly x = Poly::var(0, 0);
  CHECK(weyl_act(a1, a1.reflection(a1.simple(0)), x) == -x);
}

TEST_CASE("division by roots") {
  std::mt19937_64 rng(13);
  for (DatumName n : kAll) {
    const RootDatum& d = RootDatum::get(n);
    for (long long p : good_chars(d)) {
      for (int i = 0; i < d.num_positive(); ++i) {
        Poly alpha = root_poly(d, i, p);
        for (int t = 0; t < 6; ++t) {
          Poly g = random_poly(rng, d, p);
          CHECK(divide_exact(d, i, alpha * g) == g);
          // Divided-difference identity: alpha | f - s_alpha(f).
          Poly f = random_poly(rng, d, p);
          CHECK(congruent_mod_root(d, f, weyl_act(d, d.reflection(i), f), i));
          CHECK(congruent_mod_root(d, f, f, i));
        }
      }
    }
  }
  // A non-divisible case throws.
  const RootDatum& a2 = RootDatum::get(DatumName::A2);
  Poly f = Poly::var(0, 0) + Poly::constant(Fk::one(0));
  CHECK(!divides_root(a2, a2.simple(0), f));
  CHECK_THROWS_AS(divide_exact(a2, a2.simple(0), f), NotDivisible);
}

TEST_CASE("root fractions canonicalize") {
  const RootDatum& d = RootDatum::get(DatumName::A2);
  long long p = 0;
  Poly a0 = root_poly(d, 0, p), a1 = root_poly(d, 1, p);
  Poly g = Poly::var(0, p) + Poly::constant(Fk::one(p));

  // (alpha0^2 * g) / (alpha0 * alpha1) -> (alpha0 * g) / alpha1.
  RootFraction f(d, a0 * a0 * g, {1, 1, 0});
  CHECK(f.num() == a0 * g);
  CHECK(f.den() == std::vector<int>{0, 1, 0});
  CHECK(!f.is_polynomial());
  CHECK(f.regular_at(0));
  CHECK(!f.regular_at(1));
  CHECK_THROWS_AS(f.as_poly(), NotDivisible);

  // Multiplying back by the denominator root recovers a polynomial.
  RootFraction whole = f.times(a1);
  CHECK(whole.is_polynomial());
  CHECK(whole.as_poly() == a0 * g);

  // root_shift round trip.
  CHECK(f.root_shift(2, 1).root_shift(2, -1) == f);
  // Dividing by alpha0 cancels against the numerator factor alpha0.
  RootFraction shifted = f.root_shift(0, 1);
  CHECK(shifted.num() == g);
  CHECK(shifted.den() == std::vector<int>{0, 1, 0});
}

TEST_CASE("root fraction arithmetic") {
  std::mt19937_64 rng(14);
  for (DatumName n : kAll) {
    const RootDatum& d = RootDatum::get(n);
    for (long long p : good_chars(d)) {
      for (int t = 0; t < 8; ++t) {
        RootFraction a = random_fraction(rng, d, p);
        RootFraction b = random_fraction(rng, d, p);
        RootFraction c = random_fraction(rng, d, p);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + RootFraction() == a);
        CHECK((a * RootFraction()).is_zero());
      }
      // An element regular at every root is a polynomial.
      for (int t = 0; t < 10; ++t) {
        RootFraction a = random_fraction(rng, d, p);
        bool everywhere = true;
        for (int i = 0; i < d.num_positive(); ++i)
          everywhere = everywhere && a.regular_at(i);
        CHECK(everywhere == a.is_polynomial());
      }
    }
  }
}

TEST_CASE("finite Weyl action on fractions") {
  std::mt19937_64 rng(15);
  for (DatumName n : kAll) {
    const RootDatum& d = RootDatum::get(n);
    long long p = 0;
    // s_alpha(1/alpha) = -1/alpha.
    for (int i = 0; i < d.num_positive(); ++i) {
      std::vector<int> den(d.num_positive(), 0);
      den[i] = 1;
      RootFraction inv_a(d, Poly::constant(Fk::one(p)), den);
      CHECK(weyl_act(d, d.reflection(i), inv_a) == -inv_a);
    }
    for (int t = 0; t < 10; ++t) {
      RootFraction a = random_fraction(rng, d, p);
      RootFraction b = random_fraction(rng, d, p);
      int w1 = static_cast<int>(rng() % d.weyl_order());
      int w2 = static_cast<int>(rng() % d.weyl_order());
      CHECK(weyl_act(d, w1, a * b) == weyl_act(d, w1, a) * weyl_act(d, w1, b));
      CHECK(weyl_act(d, w1, a + b) == weyl_act(d, w1, a) + weyl_act(d, w1, b));
      CHECK(weyl_act(d, w1, weyl_act(d, w2, a)) == weyl_act(d, d.w_mul(w1, w2), a));
    }
  }
}

TEST_CASE("periodic ring evaluation") {
  std::mt19937_64 rng(16);
  for (DatumName n : kAll) {
    const RootDatum& d = RootDatum::get(n);
    long long p = 0;
    auto ball = gallery_ball(d, 3);

    // Definitional value at the fundamental alcove.
    Vec2 nu{2, d.rank() == 2 ? -1 : 0};
    REval lam = reval_of_weight(nu, p);
    CHECK(eval_at(d, lam, fundamental_alcove) == Poly::linear(nu, p));

    // Constants evaluate to themselves everywhere.
    REval c = reval_const(Fk::of(5, p));
    for (const Alcove& a : ball)
      CHECK(eval_at(d, c, a) == Poly::constant(Fk::of(5, p)));

    for (int t = 0; t < 12; ++t) {
      REval f{random_poly(rng, d, p)};
      REval g{random_poly(rng, d, p)};
      const Alcove& a = ball[rng() % ball.size()];

      // Algebra map.
      CHECK(eval_at(d, f * g, a) == eval_at(d, f, a) * eval_at(d, g, a));
      CHECK(eval_at(d, f + g, a) == eval_at(d, f, a) + eval_at(d, g, a));

      // Orbit invariance: translation by a root-lattice vector.
      Vec2 mu{static_cast<Coord>(rng() % 5) - 2, 0};
      if (d.rank() == 2) mu[1] = static_cast<Coord>(rng() % 5) - 2;
      CHECK(eval_at(d, f, a) == eval_at(d, f, translate(d, a, mu)));

      // Right intertwiner: (x(f))_A = f_{Ax}.
      AffineElt x = aff_of(ball[rng() % ball.size()]);
      Alcove ax = left_act(d, aff_mul(d, aff_of(a), x), fundamental_alcove);
      CHECK(eval_at(d, reval_act(d, x, f), a) == eval_at(d, f, ax));

      // Left intertwiner: y(f_A) = f_{yA}.
      AffineElt y = aff_of(ball[rng() % ball.size()]);
      CHECK(weyl_act(d, y.w, eval_at(d, f, a)) == eval_at(d, f, left_act(d, y, a)));
    }

    // reval_of_weight_at inverts evaluation.
    for (int t = 0; t < 6; ++t) {
      const Alcove& a = ball[rng() % ball.size()];
      REval lam2 = reval_of_weight_at(d, nu, a, p);
      CHECK(eval_at(d, lam2, a) == Poly::linear(nu, p));
    }
  }
}

TEST_CASE("wall elements") {
  for (DatumName n : kAll) {
    const RootDatum& d = RootDatum::get(n);
    long long p = 0;
    auto ball = gallery_ball(d, 3);
    for (int s = 0; s < d.num_faces(); ++s) {
      REval as = alpha_s(d, s, p);
      // Value at the fundamental orbit is the face's positive root.
      CHECK(eval_at(d, as, fundamental_alcove) ==
            root_poly(d, d.faces()[s].root, p));
      // On every orbit the value is a positive root up to sign.
      for (const Alcove& a : ball) {
        Poly val = eval_at(d, as, a);
        bool hit = false;
        for (int i = 0; i < d.num_positive() && !hit; ++i)
          hit = val == root_poly(d, i, p) || val == -root_poly(d, i, p);
        CHECK(hit);
      }
      for (bool alt : {false, true}) {
        // Pairing normalization.
        CHECK(RootDatum::pair(delta_s_weight(d, s, alt), alpha_s_covec(d, s)) == 1);
        // Reflection formula: s(delta) = delta - <delta, alpha^vee> alpha.
        REval ds = delta_s(d, s, p, alt);
        CHECK(face_act(d, s, ds) == ds - as);
      }
    }
    // The alternative choice really differs in rank 2.
    if (d.rank() == 2)
      for (int s = 0; s < d.num_faces(); ++s)
        CHECK(delta_s(d, s, p, true) != delta_s(d, s, p, false));
  }
}
