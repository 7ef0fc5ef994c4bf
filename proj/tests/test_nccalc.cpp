#include "catch_amalgamated.hpp"
#include "gwalab/nccalc.hpp"
#include "gwalab/sampler.hpp"
#include "oracles.hpp"

using namespace gwalab;

namespace {
Affine diag(Rational a, Rational d) {
  Affine g;
  g.matrix = {{{a, 0}, {0, d}}};
  return g;
}

// Δ_axis from the defining double sum, written independently.
Poly4 delta_oracle(const Poly2& g, int axis) {
  Poly4 r;
  for (const auto& [e, c] : g.terms()) {
    const std::uint32_t i1 = e[0];
    const std::uint32_t i2 = e[1];
    if (axis == 1) {
      for (std::uint32_t j = 1; j <= i1; ++j) r.add_term({i1 - j, 0, j - 1, i2}, c);
    } else {
      for (std::uint32_t j = 1; j <= i2; ++j) r.add_term({i1, i2 - j, 0, j - 1}, c);
    }
  }
  return r;
}
}  // namespace

TEST_CASE("noncommutative differential") {
  CHECK(nc_diff(z1()) == left(z1()) - right(z1()));
  CHECK(nc_diff(Poly2(5)).is_zero());
  CHECK(nc_diff(z1() * z2()) == left(z1() * z2()) - right(z1() * z2()));
}

TEST_CASE("partial derivations on worked examples") {
  CHECK(delta(z1().pow(2), 1) == left(z1()) + right(z1()));
  CHECK(delta(z2().pow(3), 1).is_zero());
  CHECK(delta(z1().pow(2) * z2(), 2) == left(z1().pow(2)));
}

TEST_CASE("twisted partial derivations") {
  const AutWord id;
  const Poly2 g = z1().pow(2);
  CHECK(twisted_delta(g, 1, {}, {}, id) == delta(g, 1));
  const AutWord s({diag(2, 1)});
  CHECK(twisted_delta(g, 1, {Twist::Sigma}, {}, s) == 2 * left(z1()) + right(z1()));
  CHECK(twisted_delta(g, 1, {}, {Twist::Partial1}, id) == Poly4(1));
}

TEST_CASE("noncommutative jacobian") {
  CHECK(nc_jacobian(AutWord()) == Poly4(1));
  Affine a;
  a.matrix = {{{2, 3}, {5, 7}}};
  a.translation = {1, -1};
  CHECK(nc_jacobian(AutWord({a})) == Poly4(Rational(2 * 7 - 3 * 5)));
  Sampler s(31);
  for (int t = 0; t < 10; ++t) {
    const AutWord w = s.word(3);
    CHECK(mu(nc_jacobian(w)) == Poly2(w.jacobian()));
  }
}

TEST_CASE("multiplication map") {
  CHECK(mu(tensor(z1(), z2())) == z1() * z2());
  Sampler s(32);
  for (int t = 0; t < 30; ++t) {
    const Poly2 g = s.poly(6);
    CHECK(mu(delta(g, 1)) == oracle::partial(g, 1));
    CHECK(mu(delta(g, 2)) == oracle::partial(g, 2));
    CHECK(mu(nc_diff(g)).is_zero());
    CHECK(delta(g, 1) == delta_oracle(g, 1));
    CHECK(delta(g, 2) == delta_oracle(g, 2));
  }
}

TEST_CASE("total derivative and the twisted expansion of d z") {
  Sampler s(33);
  for (int t = 0; t < 30; ++t) {
    const Poly2 g = s.poly(6);
    CHECK(nc_diff(g) == delta(g, 1) * nc_diff(z1()) + delta(g, 2) * nc_diff(z2()));
    const AutWord w = s.word(3);
    CHECK(twisted_diff(1, 1, 1, w) == delta(w.f1(), 1) * nc_diff(z1()) + delta(w.f1(), 2) * nc_diff(z2()));
    CHECK(twisted_diff(2, 1, 1, w) == delta(w.f2(), 1) * nc_diff(z1()) + delta(w.f2(), 2) * nc_diff(z2()));
  }
}

TEST_CASE("delta minus twisted delta times d z for the first variable") {
  Sampler s(34);
  for (int t = 0; t < 30; ++t) {
    const AutWord w = s.word(3);
    const Poly2 phi = s.poly(4);
    const Poly2 p1 = partial(phi, 1);
    CHECK(delta(phi, 1) - twisted_delta(phi, 1, {}, {Twist::Partial1}, w) * nc_diff(z1()) == right(p1));
    CHECK(twisted_delta(phi, 1, {Twist::Sigma}, {}, w) -
              twisted_delta(phi, 1, {Twist::Sigma}, {Twist::Partial1}, w) * twisted_diff(1, 1, 0, w) ==
          right(p1));
    CHECK(twisted_delta(phi, 1, {}, {Twist::Sigma}, w) -
              twisted_delta(phi, 1, {}, {Twist::Sigma, Twist::Partial1}, w) * twisted_diff(1, 0, 1, w) ==
          right(w.apply(p1)));
    CHECK(twisted_delta(phi, 1, {Twist::Sigma}, {Twist::Sigma}, w) -
              twisted_delta(phi, 1, {Twist::Sigma}, {Twist::Sigma, Twist::Partial1}, w) * twisted_diff(1, 1, 1, w) ==
          right(w.apply(p1)));
  }
}

TEST_CASE("second variable: the literal identity fails, the d z1 corrected one holds") {
  // Δ₂ keeps z₁ on the left, so z₁z₂ gives z₁⊗1 where 1⊗z₁ is claimed.
  const Poly2 phi = z1() * z2();
  const Poly4 lhs = delta(phi, 2) - twisted_delta(phi, 2, {}, {Twist::Partial2}, AutWord()) * nc_diff(z2());
  CHECK(lhs == left(z1()));
  CHECK(lhs != right(partial(phi, 2)));

  Sampler s(35);
  for (int t = 0; t < 30; ++t) {
    const AutWord w = s.word(3);
    const Poly2 f = s.poly(4);
    const Poly2 p2 = partial(f, 2);
    const Poly4 l = delta(f, 2) - twisted_delta(f, 2, {}, {Twist::Partial2}, w) * nc_diff(z2());
    CHECK(l == right(p2) + delta(p2, 1) * nc_diff(z1()));
    const Poly4 l4 = twisted_delta(f, 2, {Twist::Sigma}, {Twist::Sigma}, w) -
                     twisted_delta(f, 2, {Twist::Sigma}, {Twist::Sigma, Twist::Partial2}, w) * twisted_diff(2, 1, 1, w);
    CHECK(l4 == right(w.apply(p2)) +
                    twisted_delta(p2, 1, {Twist::Sigma}, {Twist::Sigma}, w) * twisted_diff(1, 1, 1, w));
  }
}

TEST_CASE("twist labels compose right to left") {
  const AutWord w({diag(2, 3)});
  const Poly2 p = z1().pow(2) * z2();
  CHECK(apply_twist({Twist::Sigma, Twist::Partial1}, w, p) == w.apply(partial(p, 1)));
  CHECK(apply_twist({Twist::Partial1, Twist::Sigma}, w, p) == partial(w.apply(p), 1));
  CHECK(apply_twist({Twist::SigmaInv}, w, p) == w.apply(p, -1));
}
