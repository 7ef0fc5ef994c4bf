#include "catch_amalgamated.hpp"
#include "gwalab/errors.hpp"
#include "gwalab/expr.hpp"
#include "gwalab/instance.hpp"

using namespace gwalab;

TEST_CASE("polynomial expressions") {
  CHECK(parse_poly("z1^2 + 2*z1*z2 - 3/4") == z1().pow(2) + 2 * z1() * z2() - Poly2(Rational(3, 4)));
  CHECK(parse_poly("(z1 + 1)^3") == (z1() + 1).pow(3));
  CHECK(parse_poly("-z2 / 2") == Rational(-1, 2) * z2());
  CHECK(parse_poly("p*z1 + q", {{"p", 3}, {"q", Rational(1, 2)}}) == 3 * z1() + Poly2(Rational(1, 2)));
  CHECK(parse_poly("1/(1 - q)", {{"q", 3}}) == Poly2(Rational(-1, 2)));
}

TEST_CASE("expression errors") {
  CHECK_THROWS_AS(parse_poly("z1 + t"), UnboundParameter);
  CHECK_THROWS_AS(parse_poly("z1 / z2"), Error);
  CHECK_THROWS_AS(parse_poly("z1 / (q - 1)", {{"q", 1}}), Error);
  CHECK_THROWS_AS(parse_poly("z1 +"), ParseError);
  CHECK_THROWS_AS(parse_poly("z1 $ 2"), ParseError);
  try {
    parse_poly("z1 + t");
  } catch (const UnboundParameter& e) {
    CHECK(e.name() == "t");
  }
}

TEST_CASE("automorphism words") {
  const AutWord a = parse_sigma("affine([[2, 0], [0, 3]], [0, 0])");
  CHECK(a.jacobian() == 6);
  const AutWord e = parse_sigma("elem1(z2^2); id; elem2(q*z1)", {{"q", 2}});
  // Rightmost generator first: z2 ↦ z2 + 2z1, then z1 ↦ z1 + z2².
  CHECK(e.f1() == z1() + z2().pow(2));
  CHECK(e.f2() == z2() + 2 * z1() + 2 * z2().pow(2));
  CHECK(parse_sigma("id").factors().empty());
}

TEST_CASE("word errors carry positions") {
  try {
    parse_sigma("id; elem1(z1)");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 1);
    CHECK(err.column() == 11);
  }
  CHECK_THROWS_AS(parse_sigma("affine([[1, 2], [2, 4]], [0, 0])"), ParseError);
  CHECK_THROWS_AS(parse_sigma("rotate(1)"), ParseError);
}

TEST_CASE("instance files") {
  const Instance inst = parse_instance(
      "# comment\n"
      "q = 3/2\n"
      "phi = q*z1*z2 + 1\n"
      "sigma = affine([[q, 0], [0, 1/q]], [0, 0])\n"
      "lambda = (1, -2)\n");
  CHECK(inst.parameters.at("q") == Rational(3, 2));
  CHECK(inst.algebra.phi() == Rational(3, 2) * z1() * z2() + 1);
  CHECK(inst.algebra.jacobian() == 1);
  REQUIRE(inst.lambda);
  CHECK(inst.lambda->second == -2);

  const Instance plain = parse_instance("phi = z1 + 5\n");
  CHECK(plain.algebra.sigma().factors().empty());
}

TEST_CASE("instance file errors") {
  try {
    parse_instance("phi = z1\nsigma = id; elem1(z1)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 19);
  }
  CHECK_THROWS_AS(parse_instance("phi = z1 + r\n"), UnboundParameter);
  CHECK_THROWS_AS(parse_instance("sigma = id\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("phi z1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("x = 2\nphi = z1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("[extras]\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("status = template\n"), Error);
}

TEST_CASE("parameter overrides") {
  const InstanceSpec spec = parse_instance_spec("p = 1\nq = p + 1\nphi = p*z1 + q\n");
  CHECK(realize(spec).algebra.phi() == z1() + 2);
  CHECK(realize(spec, {{"p", 0}}).algebra.phi() == Poly2(1));
  CHECK(realize(spec, {{"q", 7}}).algebra.phi() == z1() + 7);
  const Bindings b = parse_bindings({"p=1, q=1/3", {}});
  CHECK(b.at("q") == Rational(1, 3));
  CHECK_THROWS_AS(parse_bindings({"p 1", {}}), ParseError);
}
