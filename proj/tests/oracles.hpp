#pragma once

// Independent reference implementations used only by tests.

#include <string>
#include <utility>
#include <vector>

#include "gwalab/autword.hpp"
#include "gwalab/gwa.hpp"

namespace oracle {

using gwalab::Poly2;
using gwalab::Poly4;
using gwalab::Rational;

inline Rational ipow(const Rational& a, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a;
  return r;
}

/// Dense evaluation term by term.
inline Rational eval(const Poly2& p, const Rational& a, const Rational& b) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) s += c * ipow(a, e[0]) * ipow(b, e[1]);
  return s;
}

inline Rational eval4(const Poly4& p, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Rational s = 0;
  for (const auto& [e, k] : p.terms()) s += k * ipow(a, e[0]) * ipow(b, e[1]) * ipow(c, e[2]) * ipow(d, e[3]);
  return s;
}

/// Power rule term by term; axis 1 or 2.
inline Poly2 partial(const Poly2& p, int axis) {
  Poly2 r;
  const std::size_t k = axis == 1 ? 0 : 1;
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    auto f = e;
    --f[k];
    r.add_term(f, c * Rational(e[k]));
  }
  return r;
}

inline std::vector<std::pair<Rational, Rational>> points() {
  return {{Rational(1, 2), Rational(3)}, {Rational(-2), Rational(5, 7)}, {Rational(0), Rational(-1)},
          {Rational(7, 3), Rational(-4, 5)}, {Rational(11), Rational(2, 9)}, {Rational(-1, 6), Rational(-3)},
          {Rational(5), Rational(5)}, {Rational(-9, 4), Rational(1, 8)}, {Rational(3, 2), Rational(0)},
          {Rational(13, 5), Rational(-7, 2)}};
}

/// det(∂fᵢ/∂zⱼ) from the images.
inline Poly2 jacobian_det(const gwalab::AutWord& s) {
  return oracle::partial(s.f1(), 1) * oracle::partial(s.f2(), 2) - oracle::partial(s.f1(), 2) * oracle::partial(s.f2(), 1);
}

/// A W-term written as coefficient followed by a string of letters x, y.
struct Word {
  Poly2 coeff;
  std::string letters;
};

inline int degree(const std::string& letters) {
  int d = 0;
  for (char c : letters) d += c == 'x' ? 1 : -1;
  return d;
}

/// Normal form by single-step rewriting: move coefficients left, then cancel adjacent xy / yx.
inline Word rewrite(const gwalab::GwaAlgebra& w, Word t) {
  for (;;) {
    std::size_t p = 0;
    while (p + 1 < t.letters.size() && t.letters[p] == t.letters[p + 1]) ++p;
    if (p + 1 >= t.letters.size()) return t;
    const Poly2 c = t.letters[p] == 'y' ? w.phi() : w.sigma_phi();
    const std::string prefix = t.letters.substr(0, p);
    t.coeff = t.coeff * w.sigma().apply(c, degree(prefix));
    t.letters = prefix + t.letters.substr(p + 2);
  }
}

/// Product of a·u and b·v with u, v letter strings.
inline Word multiply(const gwalab::GwaAlgebra& w, const Word& a, const Word& b) {
  Word t{a.coeff * w.sigma().apply(b.coeff, degree(a.letters)), a.letters + b.letters};
  return rewrite(w, t);
}

inline gwalab::GwaElem to_elem(const Word& t) {
  const int d = degree(t.letters);
  return gwalab::GwaElem::term(d, t.coeff);
}

inline Word power_word(char letter, int n, const Poly2& c = Poly2(1)) { return {c, std::string(n, letter)}; }

}  // namespace oracle
