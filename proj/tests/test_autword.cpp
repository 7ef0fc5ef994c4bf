#include "catch_amalgamated.hpp"
#include "gwalab/autword.hpp"
#include "gwalab/errors.hpp"
#include "gwalab/sampler.hpp"
#include "oracles.hpp"

using namespace gwalab;

namespace {
Affine affine(Rational a, Rational b, Rational c, Rational d, Rational e = 0, Rational f = 0) {
  Affine g;
  g.matrix = {{{a, b}, {c, d}}};
  g.translation = {e, f};
  return g;
}
}  // namespace

TEST_CASE("apply on worked examples") {
  const AutWord e({Elementary{1, z2().pow(2)}});
  CHECK(e.apply(z1(), 1) == z1() + z2().pow(2));
  const Poly2 p = z1() * z2() + 4;
  CHECK(e.apply(p, 0) == p);
  const AutWord d({affine(2, 0, 0, 3)});
  CHECK(d.apply(z1() * z2(), -1) == Rational(1, 6) * z1() * z2());
}

TEST_CASE("generator inverses") {
  const AutGenerator inv = invert_generator(Elementary{1, z2().pow(2)});
  REQUIRE(std::holds_alternative<Elementary>(inv));
  CHECK(std::get<Elementary>(inv).axis == 1);
  CHECK(std::get<Elementary>(inv).shift == -z2().pow(2));

  const AutGenerator ia = invert_generator(affine(1, 1, 0, 1, 1, 0));
  REQUIRE(std::holds_alternative<Affine>(ia));
  const Affine& a = std::get<Affine>(ia);
  CHECK(a.matrix[0][0] == 1);
  CHECK(a.matrix[0][1] == -1);
  CHECK(a.matrix[1][0] == 0);
  CHECK(a.matrix[1][1] == 1);
  CHECK(a.translation[0] == -1);
  CHECK(a.translation[1] == 0);

  CHECK(AutWord::identity().inverse().factors().empty());
}

TEST_CASE("invalid generators are rejected") {
  CHECK_THROWS_AS(AutWord({Elementary{1, z1()}}), Error);
  CHECK_THROWS_AS(AutWord({affine(1, 2, 2, 4)}), Error);
}

TEST_CASE("jacobians") {
  CHECK(AutWord({Elementary{2, z1().pow(3) + 1}}).jacobian() == 1);
  CHECK(AutWord({affine(2, 0, 0, 3, 5, -1)}).jacobian() == 6);
  Sampler s(21);
  for (int t = 0; t < 30; ++t) {
    const AutWord a = s.word(3);
    const AutWord b = s.word(2);
    const Poly2 det = oracle::jacobian_det(a);
    REQUIRE(det.is_constant());
    CHECK(det.constant_term() == a.jacobian());
    CHECK(a.inverse().jacobian() == 1 / a.jacobian());
    CHECK(a.compose(b).jacobian() == a.jacobian() * b.jacobian());
  }
}

TEST_CASE("random words invert exactly") {
  Sampler s(22);
  for (int t = 0; t < 30; ++t) {
    const AutWord a = s.word(3, Sampler::WordStyle::Triangular);
    const AutWord inv = a.inverse();
    CHECK(a.apply(inv.apply(z1(), 1), 1) == z1());
    CHECK(a.apply(inv.apply(z2(), 1), 1) == z2());
    CHECK(a.apply(a.apply(z1(), -1), 1) == z1());
    CHECK(a.apply(a.apply(z2(), 2), -2) == z2());
  }
}

TEST_CASE("apply is a ring homomorphism and respects composition order") {
  Sampler s(23);
  for (int t = 0; t < 20; ++t) {
    const AutWord a = s.word(2);
    const AutWord b = s.word(2);
    const Poly2 p = s.poly(2);
    const Poly2 q = s.poly(2);
    CHECK(a.apply(p * q) == a.apply(p) * a.apply(q));
    CHECK(a.apply(p + q) == a.apply(p) + a.apply(q));
    // (a∘b)(p) = a(b(p)), rightmost factor first.
    CHECK(a.compose(b).apply(p) == a.apply(b.apply(p)));
    CHECK(a.apply(p, 2) == a.apply(a.apply(p)));
  }
}

TEST_CASE("words apply their rightmost factor first") {
  const AutWord w({Elementary{1, z2()}, affine(1, 0, 0, 2)});
  // z1 ↦ z1 (affine), then z1 ↦ z1 + z2 ; z2 ↦ 2z2 then unchanged → f2 = 2z2.
  CHECK(w.f1() == z1() + z2());
  CHECK(w.f2() == 2 * z2());
}
