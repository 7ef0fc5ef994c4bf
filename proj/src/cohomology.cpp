#include "gwalab/cohomology.hpp"

#include <tuple>

#include "gwalab/errors.hpp"
#include "gwalab/nccalc.hpp"

namespace gwalab {

bool Cochain4::is_zero() const {
  for (const auto& e : m22) {
    if (!e.is_zero()) return false;
  }
  for (const auto& e : m31) {
    if (!e.is_zero()) return false;
  }
  for (const auto& e : m40) {
    if (!e.is_zero()) return false;
  }
  return true;
}

CochainComplex::CochainComplex(const GwaAlgebra& w) : ds_(w, 5) {}

namespace {

// out[r] += Σ_c M(r,c)·v[c].
template <std::size_t R, std::size_t C>
void add_apply(const GwaAlgebra& w, std::array<EnvElem, R>& out, const EnvMatrix& m,
               const std::array<EnvElem, C>& v) {
  if (m.rows() != R || m.cols() != C) throw DimensionMismatch("cochain map shape mismatch");
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      if (m.at(r, c).is_zero() || v[c].is_zero()) continue;
      out[r] += env_mul(w, m.at(r, c), v[c]);
    }
  }
}

}  // namespace

Cochain4 CochainComplex::cochain_d3(const Cochain3& n) const {
  const GwaAlgebra& w = algebra();
  Cochain4 m;
  add_apply(w, m.m22, ds_.dh(1, 2), n.n12);
  add_apply(w, m.m22, ds_.dv(2, 1), n.n21);
  add_apply(w, m.m31, ds_.t(1, 2), n.n12);
  add_apply(w, m.m31, ds_.dh(2, 1), n.n21);
  add_apply(w, m.m31, ds_.dv(3, 0), n.n30);
  add_apply(w, m.m40, ds_.t(2, 1), n.n21);
  add_apply(w, m.m40, ds_.dh(3, 0), n.n30);
  return m;
}

std::array<EnvElem, 8> CochainComplex::cocycle_residuals(const Cochain4& m) const {
  const GwaAlgebra& w = algebra();
  std::array<EnvElem, 2> p32;
  std::array<EnvElem, 4> p41;
  std::array<EnvElem, 2> p50;
  add_apply(w, p32, ds_.dh(2, 2), m.m22);
  add_apply(w, p32, ds_.dv(3, 1), m.m31);
  add_apply(w, p41, ds_.t(2, 2), m.m22);
  add_apply(w, p41, ds_.dh(3, 1), m.m31);
  add_apply(w, p41, ds_.dv(4, 0), m.m40);
  add_apply(w, p50, ds_.t(3, 1), m.m31);
  add_apply(w, p50, ds_.dh(4, 0), m.m40);
  return {p32[0], p32[1], p41[0], p41[1], p41[2], p41[3], p50[0], p50[1]};
}

Report CochainComplex::is_cocycle4(const Cochain4& m) const {
  static const std::array<const char*, 8> anchors = {
      "-(x*1)m22_1 + (1*x)m22_2 - sd z2 m31_1 + sd z1 m31_2 = 0",
      "(1*y)m22_1 - (y*1)m22_2 - ds z2 m31_3 + ds z1 m31_4 = 0",
      "-D2(phi)m22_1 - (y*1)m31_1 - (1*x)m31_3 + d z1 m40_1 = 0",
      "D1(phi)m22_1 - (y*1)m31_2 - (1*x)m31_4 + d z2 m40_1 = 0",
      "-sDs2(phi)m22_2 - (1*y)m31_1 - (x*1)m31_3 + sds z1 m40_2 = 0",
      "sDs1(phi)m22_2 - (1*y)m31_2 - (x*1)m31_4 + sds z2 m40_2 = 0",
      "sD1(phi)m31_1 + sD2(phi)m31_2 - (x*1)m40_1 + (1*x)m40_2 = 0",
      "Ds1(phi)m31_3 + Ds2(phi)m31_4 + (1*y)m40_1 - (y*1)m40_2 = 0",
  };
  const auto res = cocycle_residuals(m);
  Report r;
  for (std::size_t i = 0; i < 8; ++i) {
    r.checks.push_back({"cocycle equation " + std::to_string(i + 1), anchors[i], res[i].is_zero()});
  }
  return r;
}

Cochain3 CochainComplex::build_n(const Certificate& cert, const Cochain4& m) const {
  const GwaAlgebra& w = algebra();
  const AutWord& s = w.sigma();
  const Poly2& phi = w.phi();
  if (!verify_certificate(cert, phi)) throw Error("certificate does not expand to 1");
  if (!is_cocycle4(m).all_pass()) throw NotACocycle();

  auto rt = [](const Poly2& b) { return EnvElem(right(b)); };
  const EnvElem b1 = rt(cert.beta1);
  const EnvElem b2 = rt(cert.beta2);
  const EnvElem sb1 = rt(s.apply(cert.beta1, 1));
  const EnvElem sb2 = rt(s.apply(cert.beta2, 1));
  const EnvElem ay = EnvElem::term(0, -1, right(cert.alpha));
  using T = Twist;
  auto td = [&](int axis, TwistLabel u, TwistLabel v) {
    return EnvElem(twisted_delta(phi, axis, u, v, s));
  };
  const EnvElem d1_p1 = td(1, {}, {T::Partial1});
  const EnvElem d2_p2 = td(2, {}, {T::Partial2});
  const EnvElem sd1_sp1 = td(1, {T::Sigma}, {T::Sigma, T::Partial1});
  const EnvElem sd2_sp2 = td(2, {T::Sigma}, {T::Sigma, T::Partial2});
  const EnvElem sd1_p1 = td(1, {T::Sigma}, {T::Partial1});
  const EnvElem sd2_p2 = td(2, {T::Sigma}, {T::Partial2});
  const EnvElem d1_sp1 = td(1, {}, {T::Sigma, T::Partial1});
  const EnvElem d2_sp2 = td(2, {}, {T::Sigma, T::Partial2});
  auto mul = [&](std::initializer_list<EnvElem> f) { return env_mul(w, f); };

  Cochain3 n;
  n.n12[0] = mul({b1, m.m31[1]}) - mul({b2, m.m31[0]});
  n.n12[1] = mul({sb1, m.m31[3]}) - mul({sb2, m.m31[2]}) + mul({ay, m.m22[0]});
  n.n21[0] = mul({b1, m.m40[0]}) + mul({b2, d2_p2, m.m22[0]});
  n.n21[1] = mul({b2, m.m40[0]}) - mul({b1, d1_p1, m.m22[0]});
  n.n21[2] = mul({sb1, m.m40[1]}) - mul({ay, m.m31[0]}) + mul({sb2, sd2_sp2, m.m22[1]});
  n.n21[3] = mul({sb2, m.m40[1]}) - mul({ay, m.m31[1]}) - mul({sb1, sd1_sp1, m.m22[1]});
  n.n30[0] = -mul({b1, sd1_p1, m.m31[0]}) - mul({b2, sd2_p2, m.m31[1]});
  n.n30[1] = mul({ay, m.m40[0]}) - mul({sb1, d1_sp1, m.m31[2]}) - mul({sb2, d2_sp2, m.m31[3]});
  return n;
}

void add_to(E1Vec& v, const std::pair<int, int>& key, const Poly2& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

E1Vec subtract(const E1Vec& a, const E1Vec& b) {
  E1Vec r = a;
  for (const auto& [k, c] : b) add_to(r, k, -c);
  return r;
}

E1Vec normalize_class(const GwaAlgebra& w, const EnvElem& e, int shift) {
  E1Vec r;
  for (const auto& [key, t] : e.components()) {
    const int m = key.second;
    Poly2 coeff;
    for (const auto& [ex, c] : t.terms()) {
      Poly2 left_part = Poly2::monomial({ex[0], ex[1]}, c);
      coeff += left_part * w.sigma().apply_monomial({ex[2], ex[3]}, shift - m);
    }
    add_to(r, key, coeff);
  }
  return r;
}

EnvElem class_to_env(const E1Vec& v) {
  EnvElem e;
  for (const auto& [k, c] : v) e.add(k, left(c));
  return e;
}

E12Vec e1_d0(const GwaAlgebra& w, const E1Vec& v) {
  const EnvElem src = class_to_env(v);
  const Rational& j = w.jacobian();
  EnvElem top = gens::x_right();
  top *= j;
  top -= gens::x_left();
  EnvElem bottom = gens::y_left();
  bottom *= -j;
  bottom += gens::y_right();
  return {normalize_class(w, env_mul(w, top, src), 1),
          normalize_class(w, env_mul(w, bottom, src), -1)};
}

std::pair<E1Vec, E1Vec> e1_d1(const GwaAlgebra& w, const E12Vec& v) {
  const EnvElem a = class_to_env(v.first);
  const EnvElem b = class_to_env(v.second);
  const EnvElem top = env_mul(w, gens::y_left(), a) + env_mul(w, gens::x_right(), b);
  const EnvElem bottom = env_mul(w, gens::y_right(), a) + env_mul(w, gens::x_left(), b);
  return {normalize_class(w, top, 0), normalize_class(w, bottom, 0)};
}

bool E12Class::is_zero() const {
  return a1.empty() && a2.empty() && a3.empty() && b4.empty() && c1.empty() && c2.empty();
}

namespace {

// Block keyed by its first-component position (n,m); f4 marks the b4 family,
// whose parameter is the second-component coefficient rather than the first.
using ItemKey = std::tuple<int, int, bool>;
using Items = std::map<ItemKey, Poly2>;

void add_item(Items& items, const ItemKey& k, const Poly2& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = items.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) items.erase(it);
  }
}

Items to_items(const E12Class& x) {
  Items items;
  for (const auto& [k, c] : x.a1) add_item(items, {k.first, k.second, false}, c);
  for (const auto& [k, c] : x.a2) add_item(items, {k.first, -k.second, false}, c);
  for (const auto& [k, c] : x.a3) add_item(items, {-k.first, k.second, false}, c);
  for (const auto& [k, c] : x.b4) add_item(items, {1 - k.first, 1 - k.second, true}, c);
  for (const auto& [i, c] : x.c1) add_item(items, {i, 0, false}, c);
  for (const auto& [i, c] : x.c2) add_item(items, {-i, 1, false}, c);
  return items;
}

void add_poly(std::map<std::pair<int, int>, Poly2>& m, const std::pair<int, int>& k, const Poly2& c) {
  add_to(m, k, c);
}

void add_poly(std::map<int, Poly2>& m, int k, const Poly2& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// Places one block into parameter form (canonical blocks go to c1/c2).
void place(E12Class& x, const ItemKey& key, const Poly2& c, bool prefer_canonical) {
  const auto [n, m, f4] = key;
  if (f4) {
    add_poly(x.b4, {1 - n, 1 - m}, c);
    return;
  }
  if (prefer_canonical && m == 0 && n >= 1) return add_poly(x.c1, n, c);
  if (prefer_canonical && m == 1 && n <= -1) return add_poly(x.c2, -n, c);
  if (n >= 1 && m >= 1) return add_poly(x.a1, {n, m}, c);
  if (n >= 1 && m <= 0) return add_poly(x.a2, {n, -m}, c);
  if (n <= 0 && m >= 1) return add_poly(x.a3, {-n, m}, c);
  throw Error("block at (" + std::to_string(n) + "," + std::to_string(m) +
              ") has no kernel parameterization");
}

int target_m(int n, int m) { return n + m >= 1 ? 0 : 1; }

struct Move {
  ItemKey key;
  Poly2 value;
  E1Vec witness;
};

Move step(const GwaAlgebra& w, const ItemKey& key, const Poly2& a) {
  const auto [n, m, f4] = key;
  const AutWord& s = w.sigma();
  const Rational& j = w.jacobian();
  const int tm = target_m(n, m);
  Move mv;
  if (m > tm) {
    // Witness (a/J)·eₙ⊗e_{m−1}.
    Poly2 wit = a;
    wit *= Rational(1) / j;
    add_to(mv.witness, {n, m - 1}, wit);
    Poly2 v = s.apply(a, 1);
    v *= Rational(1) / j;
    if (n < 0) v *= w.sigma_phi();
    mv.key = {n + 1, m - 1, false};
    mv.value = v;
    return mv;
  }
  // m < tm: witness c·e_{n−1}⊗eₘ.
  const Poly2 c = f4 ? a : -s.apply(a, -1);
  add_to(mv.witness, {n - 1, m}, c);
  Poly2 v = -c;
  v *= j;
  if (m < 0) v *= w.sigma_phi();
  const int nn = n - 1;
  const int nm = m + 1;
  if (nn <= 0 && nm <= 0) {
    // First-component coefficient v = −σ(φ)σ(b), so b = −σ⁻¹(v/σ(φ)).
    Poly2 b = f4 ? s.apply(a, -1) : -s.apply(a, -2);
    b *= j;
    mv.key = {nn, nm, true};
    mv.value = b;
    return mv;
  }
  mv.key = {nn, nm, false};
  mv.value = v;
  return mv;
}

bool canonical_position(const ItemKey& key) {
  const auto [n, m, f4] = key;
  return !f4 && m == target_m(n, m);
}

E12Class from_items(const Items& items, bool prefer_canonical) {
  E12Class x;
  for (const auto& [k, c] : items) place(x, k, c, prefer_canonical);
  return x;
}

E12Class canonicalize_impl(const GwaAlgebra& w, const E12Class& x, std::size_t budget,
                           std::vector<RewriteStep>* trace) {
  Items pending = to_items(x);
  Items done;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = pending.begin();
    const ItemKey key = it->first;
    const Poly2 value = it->second;
    pending.erase(it);
    if (canonical_position(key)) {
      add_item(done, key, value);
      continue;
    }
    if (++steps > budget) throw Error("E12 canonicalization exceeded its step budget");
    Move mv = step(w, key, value);
    const auto [n, m, f4] = key;
    const auto [nn, nm, nf4] = mv.key;
    if (std::abs(nm - target_m(nn, nm)) >= std::abs(m - target_m(n, m))) {
      throw Error("E12 rewrite failed to decrease its measure");
    }
    if (trace != nullptr) {
      Items before{{key, value}};
      Items after{{mv.key, mv.value}};
      trace->push_back({from_items(before, false), from_items(after, false), mv.witness});
    }
    add_item(pending, mv.key, mv.value);
  }
  return from_items(done, true);
}

}  // namespace

E12Vec class_vector(const GwaAlgebra& w, const E12Class& x) {
  const AutWord& s = w.sigma();
  E12Vec v;
  for (const auto& [key, a] : to_items(x)) {
    const auto [n, m, f4] = key;
    if (f4) {
      Poly2 top = -(w.sigma_phi() * s.apply(a, 1));
      add_to(v.first, {n, m}, top);
      add_to(v.second, {n - 1, m - 1}, a);
      continue;
    }
    add_to(v.first, {n, m}, a);
    const Poly2 sa = -s.apply(a, -1);
    if (n >= 1 && m >= 1) {
      add_to(v.second, {n - 1, m - 1}, w.phi() * sa);
    } else if (n >= 1) {
      add_to(v.second, {n - 1, m - 1}, sa);
    } else if (m >= 1) {
      add_to(v.second, {n - 1, m - 1}, sa);
    } else {
      throw Error("block outside the kernel parameterization");
    }
  }
  return v;
}

E12Class class_from_vector(const GwaAlgebra& w, const E12Vec& v) {
  Items items;
  for (const auto& [k, c] : v.first) {
    const auto [n, m] = k;
    if (n <= 0 && m <= 0) continue;
    add_item(items, {n, m, false}, c);
  }
  for (const auto& [k, c] : v.second) {
    const auto [n, m] = k;
    if (n <= -1 && m <= -1) add_item(items, {n + 1, m + 1, true}, c);
  }
  E12Class x = from_items(items, false);
  if (class_vector(w, x) != v) throw Error("vector is not a kernel element of the expected form");
  return x;
}

std::vector<RewriteStep> rewrite_trace(const GwaAlgebra& w, const E12Class& x) {
  std::vector<RewriteStep> trace;
  canonicalize_impl(w, x, 100000, &trace);
  return trace;
}

E12Class canonicalize_E12(const GwaAlgebra& w, const E12Class& x, std::size_t budget) {
  return canonicalize_impl(w, x, budget, nullptr);
}

GwaElem phi_map(const GwaAlgebra& w, const E12Class& y) {
  if (!y.is_canonical()) throw Error("phi_map expects a canonical class");
  const Rational& j = w.jacobian();
  GwaElem r;
  for (const auto& [i, c] : y.c1) r.add(i - 1, power(j, i) * w.sigma().apply(c, -1));
  for (const auto& [i, c] : y.c2) r.add(-i, power(j, -i) * c);
  return r;
}

GwaElem generator_elem(Generator g) {
  switch (g) {
    case Generator::X:
      return GwaElem::x();
    case Generator::Y:
      return GwaElem::y();
    case Generator::Z1:
      return GwaElem(z1());
    case Generator::Z2:
      return GwaElem(z2());
  }
  return {};
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::X:
      return "x";
    case Generator::Y:
      return "y";
    case Generator::Z1:
      return "z1";
    case Generator::Z2:
      return "z2";
  }
  return "?";
}

namespace {

E1Vec act(const GwaAlgebra& w, const E1Vec& v, const GwaElem& g, Side side, int shift) {
  E1Vec r;
  for (const auto& [k, c] : v) {
    const auto [n, m] = k;
    if (side == Side::Right) {
      const GwaElem prod = multiply(w, GwaElem::term(n, c), g);
      for (const auto& [nn, cc] : prod.components()) add_to(r, {nn, m}, cc);
    } else {
      const GwaElem prod = multiply(w, g, GwaElem::term(m, Poly2(1)));
      for (const auto& [mm, cc] : prod.components()) {
        add_to(r, {n, mm}, c * w.sigma().apply(cc, shift - mm));
      }
    }
  }
  return r;
}

}  // namespace

E12Class bimodule_action(const GwaAlgebra& w, const E12Class& y, Generator g, Side side) {
  const E12Vec v = class_vector(w, y);
  const GwaElem ge = generator_elem(g);
  const E12Vec acted{act(w, v.first, ge, side, 1), act(w, v.second, ge, side, -1)};
  return canonicalize_E12(w, class_from_vector(w, acted));
}

}  // namespace gwalab
