#include "catch_amalgamated.hpp"
#include "gwalab/errors.hpp"
#include "gwalab/sampler.hpp"
#include "gwalab/torwitness.hpp"

using namespace gwalab;

namespace {
const QuotientPair origin{0, 0, 3};
}

TEST_CASE("epsilon annihilation") {
  for (const Poly2& phi : {z1().pow(2), z1() * z2()}) {
    const EpsilonReport r = epsilon_annihilation(GwaAlgebra(AutWord(), phi), origin);
    CHECK(r.image1 == 0);
    CHECK(r.image2 == 0);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(epsilon_annihilation(GwaAlgebra(AutWord(), z1().pow(2) + z2().pow(2) - 1), origin),
                  NotACommonZero);
  CHECK_THROWS_AS(epsilon_annihilation(GwaAlgebra(AutWord(), z1() * z2()), QuotientPair{1, 1, 3}),
                  NotACommonZero);
}

TEST_CASE("module classes") {
  const GwaAlgebra w(AutWord(), z1().pow(2));
  // y lies in I_r, x in I_l.
  CHECK(class_in_M(w, origin, GwaElem::y()).empty());
  CHECK(class_in_N(w, origin, GwaElem::x()).empty());
  CHECK(class_in_M(w, origin, GwaElem::x(2)) == std::map<int, Rational>{{2, 1}});
  CHECK(class_in_N(w, origin, GwaElem::y(1)) == std::map<int, Rational>{{1, 1}});
  // z1 − λ₁ is in the maximal ideal.
  CHECK(class_in_M(w, origin, GwaElem(z1())).empty());
  CHECK(class_in_M(w, QuotientPair{2, 0, 3}, GwaElem(z1())) == std::map<int, Rational>{{0, 2}});

  const MNVec unit{{{0, 0}, Rational(1)}};
  CHECK(act_on_MN(w, origin, unit, gens::y_left()).empty());
  CHECK(act_on_MN(w, origin, unit, gens::x_right()).empty());
  CHECK(act_on_MN(w, origin, unit, gens::x_left()) == MNVec{{{1, 0}, Rational(1)}});
}

TEST_CASE("witness cycle and non-boundary") {
  for (const Poly2& phi : {z1().pow(2), z1() * z2()}) {
    const GwaAlgebra w(AutWord(), phi);
    const CycleReport c = witness_cycle(w, origin);
    CHECK(c.pass);
    CHECK(c.t21_image.size() == 4);
    CHECK(c.dh30_image.size() == 2);
    for (const auto& v : c.t21_image) CHECK(v.empty());
    for (const auto& v : c.dh30_image) CHECK(v.empty());
    const BoundaryReport b = not_boundary(w, origin);
    CHECK(b.pass);
    CHECK(b.degree_zero_rank == 0);
    CHECK(b.preimages > 0);
    CHECK(run_witness_chain(w, origin).pass());
  }
}

TEST_CASE("the witness chain does not depend on sigma") {
  Sampler s(81);
  for (const Poly2& phi : {z1().pow(2), z1() * z2()}) {
    for (int t = 0; t < 3; ++t) {
      CHECK(run_witness_chain(GwaAlgebra(s.word(2, Sampler::WordStyle::Triangular), phi), origin).pass());
    }
  }
}

TEST_CASE("the witness works at a shifted zero") {
  const Poly2 phi = (z1() - 1) * (z2() + 2);
  CHECK(run_witness_chain(GwaAlgebra(AutWord(), phi), QuotientPair{1, -2, 3}).pass());
}
