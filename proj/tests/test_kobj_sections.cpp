// Section functors and stalks of graded lattice objects: sections over
// up-closed alcove sets, the signed-distance stalk formula for orbit
// lattices, and the invariances that make the stalk character well defined
// (choice of filtration, degree window, composition of section functors).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "alcalc/alcove.hpp"
#include "alcalc/charobj.hpp"
#include "alcalc/kobj.hpp"
#include "alcalc/laurent.hpp"
#include "alcalc/root_datum.hpp"

using namespace alcalc;

namespace {

const RootDatum& A1 = RootDatum::get(DatumName::A1);
const RootDatum& A1XA1 = RootDatum::get(DatumName::A1xA1);
const RootDatum& A2 = RootDatum::get(DatumName::A2);
const RootDatum& B2 = RootDatum::get(DatumName::B2);

LaurentPoly v_pow(int n) { return LaurentPoly::v_pow(n); }

std::set<Alcove> up_set(const KObj& m, const Alcove& a) {
  std::set<Alcove> i;
  for (const auto& [b, r] : m.support())
    if (leq(m.datum(), a, b)) i.insert(b);
  return i;
}

// A linear extension of <= on the support, listed minimal-element first, so
// that every suffix is an up-closed set.  `last` flips which minimal element
// is taken when several are available, producing a different extension
// whenever the support is not a chain.
std::vector<Alcove> peel_order(const KObj& m, bool last) {
  const RootDatum& d = m.datum();
  std::vector<Alcove> rem;
  for (const auto& [a, r] : m.support()) rem.push_back(a);
  std::vector<Alcove> order;
  while (!rem.empty()) {
    std::vector<size_t> mins;
    for (size_t i = 0; i < rem.size(); ++i) {
      bool is_min = true;
      for (size_t j = 0; j < rem.size() && is_min; ++j)
        if (j != i && leq(d, rem[j], rem[i])) is_min = false;
      if (is_min) mins.push_back(i);
    }
    REQUIRE(!mins.empty());
    const size_t pick = last ? mins.back() : mins.front();
    order.push_back(rem[pick]);
    rem.erase(rem.begin() + static_cast<long>(pick));
  }
  return order;
}

}  // namespace

TEST_CASE("orbit lattice stalks equal the signed-distance formula") {
  // stalk(Q_lambda at A) = v^{2 dist(A, A_lambda^-)} over the whole orbit;
  // dist is the signed crossing count, so the exponents are <= 0.  This is
  // the identity that pins the sign convention of dist against the engine.
  struct Case {
    const RootDatum* d;
    long long p;
    Vec2 lam;
  };
  const std::vector<Case> cases = {
      {&A1, 0, {0, 0}},    {&A1, 0, {-2, 0}}, {&A1XA1, 0, {0, 0}},
      {&A1XA1, 0, {1, -1}}, {&A2, 0, {0, 0}},  {&A2, 0, {1, 0}},
      {&B2, 7, {0, 0}},
  };
  for (const auto& c : cases) {
    const RootDatum& d = *c.d;
    const KObj q = make_Q_lambda(d, c.p, c.lam);
    const Alcove amin = box_max(d, c.lam);
    const std::vector<Alcove> orbit = wlambda_orbit(d, c.lam);
    REQUIRE(q.support().size() == orbit.size());
    for (const Alcove& a : orbit) {
      const Coord dd = dist(d, a, amin);
      CHECK(dd <= 0);  // amin is the <=-least orbit element
      CHECK(stalk_grk(q, a) == v_pow(static_cast<int>(2 * dd)));
    }
  }
}

TEST_CASE("sections over a principal upper set cut out the root line") {
  // Rank-1 datum, lambda = 0: the orbit has two alcoves.  Sections over the
  // upper one form the line spanned by (root) * (unit vector): one generator
  // in degree 2, i.e. graded rank v^{-2}.
  const KObj q = make_Q_lambda(A1, 0, {0, 0});
  const Alcove amin = box_max(A1, {0, 0});
  const std::vector<Alcove> orbit = wlambda_orbit(A1, {0, 0});
  REQUIRE(orbit.size() == 2);
  Alcove top = orbit[0] == amin ? orbit[1] : orbit[0];

  const KObj s = sections(q, {top});
  CHECK(s.rank() == 1);
  CHECK(s.grk() == v_pow(-2));
  REQUIRE(s.slots().size() == 1);
  CHECK(s.slots()[0].a == top);
  REQUIRE(s.gens().size() == 1);
  CHECK(s.gens()[0].degree == 2);
  // The component is a scalar multiple of the simple-root linear form.
  const Poly& c = s.gens()[0].comp[0];
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms().begin()->first == Expo{1, 0});

  // Sections over the whole support are the identity.
  std::set<Alcove> all;
  for (const auto& [a, r] : q.support()) all.insert(a);
  const KObj sall = sections(q, all);
  CHECK(sall.rank() == q.rank());
  CHECK(sall.grk() == q.grk());

  // Hexagonal datum: the unique top orbit alcove has stalk = sections v^{-6}.
  const KObj q2 = make_Q_lambda(A2, 0, {0, 0});
  Alcove top2 = q2.support().front().first;
  for (const auto& [a, r] : q2.support())
    if (leq(A2, top2, a)) top2 = a;
  const KObj s2 = sections(q2, {top2});
  CHECK(s2.rank() == 1);
  CHECK(s2.grk() == v_pow(-6));
  CHECK(stalk_grk(q2, top2) == v_pow(-6));
}

TEST_CASE("stalk telescope is independent of the filtration") {
  // For nested up-closed sets with singleton steps, the successive section
  // quotients have graded ranks equal to the stalks, whichever linear
  // extension of <= generates the chain, and they telescope to grk(M).
  std::vector<KObj> objects;
  objects.push_back(make_Q_lambda(A1, 0, {0, 0}));
  objects.push_back(star_word(make_Q_lambda(A1, 0, {0, 0}), {1, 0}));
  objects.push_back(star_word(make_Q_lambda(A1XA1, 0, {0, 0}), {0, 1}));
  objects.push_back(make_Q_lambda(A2, 0, {0, 0}));

  for (const KObj& m : objects) {
    for (bool last : {false, true}) {
      const std::vector<Alcove> order = peel_order(m, last);
      // suffix_grk[j] = grk of sections over {order[j], ..., order[n-1]}.
      const size_t n = order.size();
      std::vector<LaurentPoly> suffix_grk(n + 1, LaurentPoly::zero());
      std::set<Alcove> upper;
      for (size_t j = n; j-- > 0;) {
        upper.insert(order[j]);
        suffix_grk[j] = sections(m, upper).grk();
      }
      CHECK(suffix_grk[0] == m.grk());
      for (size_t j = 0; j < n; ++j)
        CHECK(suffix_grk[j] - suffix_grk[j + 1] == stalk_grk(m, order[j]));
    }
  }
}

TEST_CASE("degree window enlargement does not change sections or stalks") {
  const KObj m = star_word(make_Q_lambda(A1, 0, {0, 0}), {0, 1});
  for (const auto& [a, r] : m.support()) {
    CHECK(stalk_grk(m, a) == stalk_grk(m, a, 24));
    const std::set<Alcove> i = up_set(m, a);
    CHECK(sections(m, i).grk() == sections(m, i, 30).grk());
  }
}

TEST_CASE("section functors compose and ignore alcoves off the support") {
  const KObj q = make_Q_lambda(A2, 7, {0, 0});
  // Pick a middle orbit alcove: not the minimum, not the maximum.
  const Alcove amin = box_max(A2, {0, 0});
  Alcove mid = amin;
  for (const auto& [a, r] : q.support())
    if (!(a == amin) && up_set(q, a).size() > 1) mid = a;
  REQUIRE(!(mid == amin));

  const std::set<Alcove> i = up_set(q, mid);
  REQUIRE(i.size() > 1);
  REQUIRE(i.size() < q.support().size());
  const KObj si = sections(q, i);
  CHECK(si.rank() == static_cast<int>(i.size()));

  // Composing with a smaller up-set matches sectioning directly.
  Alcove top = *i.begin();
  for (const Alcove& a : i)
    if (leq(A2, top, a)) top = a;
  const std::set<Alcove> j = {top};
  const KObj s_direct = sections(q, j);
  const KObj s_composed = sections(si, j);
  CHECK(s_direct.grk() == s_composed.grk());
  CHECK(s_direct.rank() == s_composed.rank());

  // Alcoves outside the support are ignored.
  std::set<Alcove> padded = i;
  for (const Alcove& a : gallery_ball(A2, 4)) {
    if (q.rank_at(a) == 0) {
      padded.insert(a);
      break;
    }
  }
  REQUIRE(padded.size() == i.size() + 1);
  CHECK(sections(q, padded).grk() == si.grk());
}
