#include "gwalab/ideal.hpp"

#include <algorithm>
#include <set>

#include "gwalab/errors.hpp"

namespace gwalab {

Exponent<2> leading_exponent(const Poly2& p) { return p.terms().rbegin()->first; }
Rational leading_coefficient(const Poly2& p) { return p.terms().rbegin()->second; }

namespace {

struct Tracked {
  Poly2 poly;
  std::vector<Poly2> cof;
};

bool divides(const Exponent<2>& a, const Exponent<2>& b) { return a[0] <= b[0] && a[1] <= b[1]; }

Exponent<2> lcm(const Exponent<2>& a, const Exponent<2>& b) {
  return {std::max(a[0], b[0]), std::max(a[1], b[1])};
}

void axpy(std::vector<Poly2>& y, const Poly2& m, const std::vector<Poly2>& x) {
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (!x[k].is_zero()) y[k] -= m * x[k];
  }
}

// Full reduction of f by basis, recording the quotients into f.cof.
void full_reduce(Tracked& f, const std::vector<Tracked>& basis) {
  Poly2 remainder;
  while (!f.poly.is_zero()) {
    const auto lead = leading_exponent(f.poly);
    const Rational lc = leading_coefficient(f.poly);
    bool reduced = false;
    for (const auto& g : basis) {
      const auto glead = leading_exponent(g.poly);
      if (!divides(glead, lead)) continue;
      const Poly2 m = Poly2::monomial({lead[0] - glead[0], lead[1] - glead[1]},
                                      lc / leading_coefficient(g.poly));
      f.poly -= m * g.poly;
      axpy(f.cof, m, g.cof);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lead, lc);
      f.poly.add_term(lead, -lc);
    }
  }
  f.poly = remainder;
}

}  // namespace

Poly2 reduce(const Poly2& p, const std::vector<Poly2>& basis) {
  Tracked f{p, {}};
  std::vector<Tracked> b;
  for (const auto& g : basis) b.push_back({g, {}});
  full_reduce(f, b);
  return f.poly;
}

GBasis buchberger(const std::vector<Poly2>& gens) {
  const std::size_t k = gens.size();
  std::vector<Tracked> basis;
  for (std::size_t i = 0; i < k; ++i) {
    if (gens[i].is_zero()) continue;
    Tracked t{gens[i], std::vector<Poly2>(k)};
    t.cof[i] = Poly2(1);
    basis.push_back(std::move(t));
  }
  if (basis.empty()) throw EmptyInput();

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.insert({i, j});
  }
  while (!pairs.empty()) {
    const auto [i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const auto li = leading_exponent(basis[i].poly);
    const auto lj = leading_exponent(basis[j].poly);
    const auto l = lcm(li, lj);
    if (l[0] == li[0] + lj[0] && l[1] == li[1] + lj[1]) continue;  // coprime leads
    const Poly2 mi = Poly2::monomial({l[0] - li[0], l[1] - li[1]},
                                     Rational(1) / leading_coefficient(basis[i].poly));
    const Poly2 mj = Poly2::monomial({l[0] - lj[0], l[1] - lj[1]},
                                     Rational(1) / leading_coefficient(basis[j].poly));
    Tracked s{mi * basis[i].poly - mj * basis[j].poly, std::vector<Poly2>(k)};
    for (std::size_t c = 0; c < k; ++c) s.cof[c] = mi * basis[i].cof[c] - mj * basis[j].cof[c];
    full_reduce(s, basis);
    if (s.poly.is_zero()) continue;
    basis.push_back(std::move(s));
    const std::size_t n = basis.size() - 1;
    for (std::size_t a = 0; a < n; ++a) pairs.insert({a, n});
  }

  // Minimalize: drop elements whose lead is divisible by another's lead.
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto li = leading_exponent(basis[i].poly);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto lj = leading_exponent(basis[j].poly);
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce and normalize to monic.
  GBasis out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Tracked> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Tracked t = minimal[i];
    const auto lead = leading_exponent(t.poly);
    const Rational lc = leading_coefficient(t.poly);
    Tracked tail{t.poly - Poly2::monomial(lead, lc), t.cof};
    full_reduce(tail, others);
    Tracked r{tail.poly + Poly2::monomial(lead, lc), tail.cof};
    const Rational inv = Rational(1) / lc;
    r.poly *= inv;
    for (auto& c : r.cof) c *= inv;
    out.generators.push_back(r.poly);
    out.cofactors.push_back(r.cof);
  }
  // Deterministic order: ascending leading monomial.
  std::vector<std::size_t> idx(out.generators.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return GradedLex<2>{}(leading_exponent(out.generators[a]), leading_exponent(out.generators[b]));
  });
  GBasis sorted;
  for (auto i : idx) {
    sorted.generators.push_back(out.generators[i]);
    sorted.cofactors.push_back(out.cofactors[i]);
  }
  return sorted;
}

Poly2 combine(const std::vector<Poly2>& cofactors, const std::vector<Poly2>& gens) {
  Poly2 r;
  for (std::size_t k = 0; k < gens.size(); ++k) r += cofactors[k] * gens[k];
  return r;
}

bool verify_certificate(const Certificate& c, const Poly2& phi) {
  return c.alpha * phi + c.beta1 * partial(phi, 1) + c.beta2 * partial(phi, 2) == Poly2(1);
}

std::pair<bool, std::optional<std::vector<Poly2>>> contains_one(const std::vector<Poly2>& gens) {
  bool any = false;
  for (const auto& g : gens) any = any || !g.is_zero();
  if (!any) return {false, std::nullopt};
  const GBasis gb = buchberger(gens);
  if (gb.generators.size() != 1 || gb.generators[0] != Poly2(1)) return {false, std::nullopt};
  const auto& cof = gb.cofactors[0];
  if (combine(cof, gens) != Poly2(1)) throw Error("internal error: cofactors do not expand to 1");
  return {true, cof};
}

std::optional<std::pair<Rational, Rational>> find_common_zero(const std::vector<Poly2>& polys,
                                                             int bound) {
  std::vector<Rational> values;
  std::set<Rational> seen;
  for (int h = 0; h <= 2 * bound; ++h) {
    for (int den = 1; den <= bound; ++den) {
      for (int num = -bound; num <= bound; ++num) {
        if (std::abs(num) + den != h + 1) continue;
        Rational q(num, den);
        q.canonicalize();
        if (seen.insert(q).second) values.push_back(q);
      }
    }
  }
  for (std::size_t s = 0; s < 2 * values.size(); ++s) {
    for (std::size_t i = 0; i <= s && i < values.size(); ++i) {
      const std::size_t j = s - i;
      if (j >= values.size()) continue;
      bool all = true;
      for (const auto& p : polys) {
        if (!is_zero(eval(p, values[i], values[j]))) {
          all = false;
          break;
        }
      }
      if (all) return std::make_pair(values[i], values[j]);
    }
  }
  return std::nullopt;
}

SmoothVerdict smoothness_test(const GwaAlgebra& w) {
  SmoothVerdict v;
  const Poly2& phi = w.phi();
  if (phi.is_zero()) {
    v.reason = SmoothReason::ZeroPhi;
    return v;
  }
  const std::vector<Poly2> gens{phi, partial(phi, 1), partial(phi, 2)};
  auto [one, cof] = contains_one(gens);
  if (one) {
    Certificate c{(*cof)[0], (*cof)[1], (*cof)[2]};
    if (!verify_certificate(c, phi)) throw Error("internal error: certificate failed to verify");
    v.smooth = true;
    v.certificate = c;
    return v;
  }
  v.reason = SmoothReason::ProperIdeal;
  v.common_zero = find_common_zero(gens);
  return v;
}

std::string to_string(SmoothReason r) {
  switch (r) {
    case SmoothReason::None:
      return "none";
    case SmoothReason::ZeroPhi:
      return "zero-phi";
    case SmoothReason::ProperIdeal:
      return "proper-ideal";
  }
  return "none";
}

}  // namespace gwalab
