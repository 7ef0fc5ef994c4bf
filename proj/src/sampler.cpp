#include "gwalab/sampler.hpp"

namespace gwalab {

Rational Sampler::coefficient(long height) {
  long num = uniform(1, height);
  if (coin()) num = -num;
  const long den = coin() ? 1 : uniform(1, height);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Poly2 Sampler::poly(int max_degree, int terms) {
  Poly2 p;
  const long count = uniform(1, terms);
  for (long t = 0; t < count; ++t) {
    const auto total = static_cast<std::uint32_t>(uniform(0, max_degree));
    const auto i = static_cast<std::uint32_t>(uniform(0, total));
    p.add_term({i, total - i}, coefficient());
  }
  return p;
}

Poly2 Sampler::nonzero_poly(int max_degree, int terms) {
  for (;;) {
    Poly2 p = poly(max_degree, terms);
    if (!p.is_zero()) return p;
  }
}

Poly2 Sampler::poly_in(int var, int max_degree) {
  Poly2 p;
  const long count = uniform(1, 2);
  for (long t = 0; t < count; ++t) {
    const auto d = static_cast<std::uint32_t>(uniform(0, max_degree));
    p.add_term(var == 1 ? Exponent<2>{d, 0} : Exponent<2>{0, d}, coefficient());
  }
  return p;
}

Poly4 Sampler::poly4(int max_degree, int terms) {
  Poly4 p;
  const long count = uniform(1, terms);
  for (long t = 0; t < count; ++t) {
    Exponent<4> e{};
    for (auto& x : e) x = static_cast<std::uint32_t>(uniform(0, max_degree));
    p.add_term(e, coefficient());
  }
  return p;
}

AutGenerator Sampler::generator(WordStyle style) {
  if (coin()) {
    const int axis = style == WordStyle::Triangular ? 1 : static_cast<int>(uniform(1, 2));
    return Elementary{axis, poly_in(axis == 1 ? 2 : 1, 3)};
  }
  Affine a;
  for (;;) {
    for (auto& row : a.matrix) {
      for (auto& x : row) x = Rational(uniform(-3, 3));
    }
    if (style == WordStyle::Triangular) a.matrix[1][0] = 0;
    if (!is_zero(a.matrix[0][0] * a.matrix[1][1] - a.matrix[0][1] * a.matrix[1][0])) break;
  }
  for (auto& x : a.translation) x = Rational(uniform(-3, 3));
  return a;
}

AutWord Sampler::word(int max_length, WordStyle style) {
  std::vector<AutGenerator> factors;
  const long len = uniform(1, max_length);
  for (long i = 0; i < len; ++i) factors.push_back(generator(style));
  return AutWord(std::move(factors));
}

GwaElem Sampler::element(int max_abs_degree, int max_poly_degree) {
  GwaElem e;
  const long count = uniform(1, 3);
  for (long t = 0; t < count; ++t) {
    e.add(static_cast<int>(uniform(-max_abs_degree, max_abs_degree)), poly(max_poly_degree, 2));
  }
  return e;
}

EnvElem Sampler::env_elem(int max_abs_degree, int max_poly_degree) {
  EnvElem e;
  const long count = uniform(1, 2);
  for (long t = 0; t < count; ++t) {
    e.add({static_cast<int>(uniform(-max_abs_degree, max_abs_degree)),
           static_cast<int>(uniform(-max_abs_degree, max_abs_degree))},
          poly4(max_poly_degree));
  }
  return e;
}

Cochain3 Sampler::cochain3() {
  Cochain3 n;
  auto fill = [&](auto& slots) {
    for (auto& s : slots) {
      if (coin()) s = env_elem(3, 2);
    }
  };
  fill(n.n12);
  fill(n.n21);
  fill(n.n30);
  return n;
}

E12Class Sampler::canonical_class(int max_index, int max_poly_degree) {
  E12Class c;
  const long count = uniform(1, 3);
  for (long t = 0; t < count; ++t) {
    auto& target = coin() ? c.c1 : c.c2;
    const int i = static_cast<int>(uniform(1, max_index));
    const Poly2 p = poly(max_poly_degree, 2) + target[i];
    if (p.is_zero()) {
      target.erase(i);
    } else {
      target[i] = p;
    }
  }
  return c;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace gwalab
