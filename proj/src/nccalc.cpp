#include "gwalab/nccalc.hpp"

namespace gwalab {

Poly2 apply_twist(const TwistLabel& label, const AutWord& sigma, const Poly2& p) {
  Poly2 r = p;
  for (auto it = label.rbegin(); it != label.rend(); ++it) {
    switch (*it) {
      case Twist::Id:
        break;
      case Twist::Sigma:
        r = sigma.apply(r, 1);
        break;
      case Twist::SigmaInv:
        r = sigma.apply(r, -1);
        break;
      case Twist::Partial1:
        r = partial(r, 1);
        break;
      case Twist::Partial2:
        r = partial(r, 2);
        break;
    }
  }
  return r;
}

std::string to_string(const TwistLabel& label) {
  if (label.empty()) return "id";
  std::string s;
  for (auto t : label) {
    switch (t) {
      case Twist::Id:
        s += "id";
        break;
      case Twist::Sigma:
        s += "s";
        break;
      case Twist::SigmaInv:
        s += "s^-1";
        break;
      case Twist::Partial1:
        s += "d1";
        break;
      case Twist::Partial2:
        s += "d2";
        break;
    }
  }
  return s;
}

Poly4 nc_diff(const Poly2& g) { return left(g) - right(g); }

Poly4 delta(const Poly2& g, int axis) {
  const std::size_t k = axis == 1 ? 0 : 1;
  Poly4 r;
  for (const auto& [e, c] : g.terms()) {
    for (std::uint32_t j = 1; j <= e[k]; ++j) {
      Exponent<4> t{};
      if (k == 0) {
        t = {e[0] - j, 0, j - 1, e[1]};
      } else {
        t = {e[0], e[1] - j, 0, j - 1};
      }
      r.add_term(t, c);
    }
  }
  return r;
}

Poly4 twisted_delta(const Poly2& g, int axis, const TwistLabel& u, const TwistLabel& v,
                    const AutWord& sigma) {
  return apply_sides(
      delta(g, axis), [&](const Poly2& p) { return apply_twist(u, sigma, p); },
      [&](const Poly2& p) { return apply_twist(v, sigma, p); });
}

Poly4 nc_jacobian(const AutWord& sigma) {
  const Poly2& f1 = sigma.f1();
  const Poly2& f2 = sigma.f2();
  return delta(f1, 1) * delta(f2, 2) - delta(f2, 1) * delta(f1, 2);
}

Poly4 twisted_diff(int axis, int l, int r, const AutWord& sigma) {
  const Poly2 z = axis == 1 ? z1() : z2();
  return left(sigma.apply(z, l)) - right(sigma.apply(z, r));
}

Poly4 twist_sides(const Poly4& t, int l, int r, const AutWord& sigma) {
  if (l == 0 && r == 0) return t;
  Poly4 out;
  for (const auto& [e, c] : t.terms()) {
    const Poly2& a = sigma.apply_monomial({e[0], e[1]}, l);
    const Poly2& b = sigma.apply_monomial({e[2], e[3]}, r);
    Poly4 term = tensor(a, b);
    term *= c;
    out += term;
  }
  return out;
}

}  // namespace gwalab
