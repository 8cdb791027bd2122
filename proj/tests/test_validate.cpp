// Structural validators: section gluing, local decomposition at each root,
// standard filtration freeness, and stalk exactness of section triples.
// Engine-built lattices must pass all four; a hand-built corrupted lattice
// (a congruence glued across two incomparable alcoves) must fail each one
// with an explicit witness.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "alcalc/alcove.hpp"
#include "alcalc/kobj.hpp"
#include "alcalc/poly.hpp"
#include "alcalc/root_datum.hpp"
#include "alcalc/validate.hpp"

using namespace alcalc;

namespace {

const RootDatum& A1 = RootDatum::get(DatumName::A1);
const RootDatum& A1XA1 = RootDatum::get(DatumName::A1xA1);
const RootDatum& A2 = RootDatum::get(DatumName::A2);

void expect_all_pass(const KObj& m, const ValidateOptions& opt = {}) {
  for (const CheckResult& c : validate(m, opt)) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.ok);
  }
}

}  // namespace

TEST_CASE("engine lattices pass the structural validators") {
  expect_all_pass(make_Q_lambda(A1, 0, {0, 0}));
  expect_all_pass(star_word(make_Q_lambda(A1, 0, {0, 0}), {1, 0}));
  expect_all_pass(star_word(make_Q_lambda(A1XA1, 0, {0, 0}), {0, 1}));
  expect_all_pass(make_Q_lambda(A2, 0, {0, 0}));
}

TEST_CASE("validator instance counts reflect the sampled closed sets") {
  const KObj q = make_Q_lambda(A2, 0, {0, 0});
  const std::vector<CheckResult> res = validate(q);
  REQUIRE(res.size() == 4);
  CHECK(res[0].instances > 0);   // the orbit has incomparable alcoves
  CHECK(res[1].instances > 0);   // several reflection orbits per root
  CHECK(res[2].instances == 6);  // one filtration step per support alcove
  CHECK(res[3].instances > 0);

  // A chain support admits no incomparable closed pairs: gluing is vacuous.
  const CheckResult glue = check_sections_glue(make_Q_lambda(A1, 0, {0, 0}));
  CHECK(glue.ok);
  CHECK(glue.instances == 0);
}

TEST_CASE("wall crossing of the hexagonal orbit lattice validates at p") {
  const KObj m = star_bs(make_Q_lambda(A2, 7, {0, 0}), 2);
  ValidateOptions opt;
  opt.max_instances = 3;
  expect_all_pass(m, opt);
}

TEST_CASE("corrupted congruence lattice fails every validator with a witness") {
  // Two incomparable alcoves glued by a congruence mod a root: the result is
  // a legal presentation (homogeneous, saturated, generically free) but it
  // violates every structural axiom.
  const RootDatum& d = A1XA1;
  const Alcove b2{0, {-1, 1}};
  const Alcove b1{0, {0, 0}};
  REQUIRE(!leq(d, b1, b2));
  REQUIRE(!leq(d, b2, b1));

  const Poly one = Poly::constant(Fk::one(0));
  const Poly zero = Poly::zero(0);
  const Poly alpha = root_poly(d, 0, 0);
  std::vector<KSlot> slots = {{b2, 0}, {b1, 0}};
  std::vector<KGen> gens;
  gens.push_back({0, {one, one}});
  gens.push_back({2, {alpha, zero}});
  const KObj bad(d, 0, std::move(slots), std::move(gens));
  bad.check_shape();  // the corruption is semantic, not structural

  const std::vector<CheckResult> res = validate(bad);
  REQUIRE(res.size() == 4);
  for (const CheckResult& c : res) {
    INFO(c.name);
    CHECK(!c.ok);
    CHECK(!c.witness.empty());
  }
}
