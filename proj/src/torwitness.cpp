#include "gwalab/torwitness.hpp"

#include "gwalab/errors.hpp"
#include "gwalab/nccalc.hpp"

namespace gwalab {

std::map<int, Rational> class_in_M(const GwaAlgebra& w, const QuotientPair& qp, const GwaElem& g) {
  (void)w;
  std::map<int, Rational> r;
  for (const auto& [n, c] : g.components()) {
    if (n < 0) continue;
    Rational v = eval(c, qp.lambda1, qp.lambda2);
    if (!is_zero(v)) r[n] += v;
  }
  return r;
}

std::map<int, Rational> class_in_N(const GwaAlgebra& w, const QuotientPair& qp, const GwaElem& g) {
  std::map<int, Rational> r;
  for (const auto& [n, c] : g.components()) {
    if (n > 0) continue;
    // c·eₙ = eₙ·σ^{−n}(c).
    Rational v = eval(w.sigma().apply(c, -n), qp.lambda1, qp.lambda2);
    if (!is_zero(v)) r[-n] += v;
  }
  return r;
}

namespace {

void add_mn(MNVec& v, const std::pair<int, int>& k, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = v.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  }
}

MNVec unit() { return MNVec{{{0, 0}, Rational(1)}}; }

}  // namespace

MNVec act_on_MN(const GwaAlgebra& w, const QuotientPair& qp, const MNVec& v, const EnvElem& e) {
  MNVec r;
  for (const auto& [basis, coeff] : v) {
    const auto [j, i] = basis;
    for (const auto& [key, t] : e.components()) {
      const auto [n, m] = key;
      for (const auto& [ex, c] : t.terms()) {
        const GwaElem left_part = multiply(w, GwaElem::x(j), GwaElem::term(n, Poly2::monomial({ex[0], ex[1]})));
        const GwaElem right_part = multiply(w, GwaElem::term(m, Poly2::monomial({ex[2], ex[3]})), GwaElem::y(i));
        const auto cm = class_in_M(w, qp, left_part);
        const auto cn = class_in_N(w, qp, right_part);
        for (const auto& [a, va] : cm) {
          for (const auto& [b, vb] : cn) add_mn(r, {a, b}, coeff * c * va * vb);
        }
      }
    }
  }
  return r;
}

EpsilonReport epsilon_annihilation(const GwaAlgebra& w, const QuotientPair& qp) {
  const Poly2& phi = w.phi();
  for (const auto& p : {phi, partial(phi, 1), partial(phi, 2)}) {
    if (!is_zero(eval(p, qp.lambda1, qp.lambda2))) throw NotACommonZero();
  }
  EpsilonReport r;
  r.image1 = eval_both(delta(phi, 1), qp.lambda1, qp.lambda2);
  r.image2 = eval_both(delta(phi, 2), qp.lambda1, qp.lambda2);
  r.pass = is_zero(r.image1) && is_zero(r.image2);
  return r;
}

CycleReport witness_cycle(const GwaAlgebra& w, const QuotientPair& qp) {
  const DifferentialSet ds(w, 4);
  CycleReport r;
  r.pass = true;
  const EnvMatrix& t21 = ds.t(2, 1);
  for (std::size_t k = 0; k < t21.cols(); ++k) {
    r.t21_image.push_back(act_on_MN(w, qp, unit(), t21.at(0, k)));
    r.pass = r.pass && r.t21_image.back().empty();
  }
  const EnvMatrix& dh30 = ds.dh(3, 0);
  for (std::size_t k = 0; k < dh30.cols(); ++k) {
    r.dh30_image.push_back(act_on_MN(w, qp, unit(), dh30.at(0, k)));
    r.pass = r.pass && r.dh30_image.back().empty();
  }
  return r;
}

namespace {

// Row-reduces vectors (as sparse maps) incrementally; returns the rank.
class Span {
 public:
  using Key = std::tuple<int, int, int>;
  using Vec = std::map<Key, Rational>;

  void insert(Vec v) {
    reduce(v);
    if (v.empty()) return;
    const Key pivot = v.begin()->first;
    const Rational inv = Rational(1) / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    rows_.emplace(pivot, std::move(v));
  }
  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(Vec& v) const {
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (const auto& [k, c] : v) {
        auto it = rows_.find(k);
        if (it == rows_.end()) continue;
        const Rational f = c;
        for (const auto& [rk, rc] : it->second) {
          Rational& slot = v[rk];
          slot -= f * rc;
        }
        for (auto i = v.begin(); i != v.end();) i = is_zero(i->second) ? v.erase(i) : std::next(i);
        changed = true;
        break;
      }
    }
  }
  std::map<Key, Vec> rows_;
};

}  // namespace

BoundaryReport not_boundary(const GwaAlgebra& w, const QuotientPair& qp) {
  const DifferentialSet ds(w, 4);
  const EnvMatrix& dv40 = ds.dv(4, 0);
  const EnvMatrix& dh40 = ds.dh(4, 0);
  Span span;
  Span degree_zero;
  BoundaryReport r;
  for (const EnvMatrix* m : {&dv40, &dh40}) {
    for (std::size_t row = 0; row < m->rows(); ++row) {
      for (int j = 0; j <= qp.truncation; ++j) {
        for (int i = 0; i <= qp.truncation; ++i) {
          const MNVec src{{{j, i}, Rational(1)}};
          Span::Vec image;
          for (std::size_t col = 0; col < m->cols(); ++col) {
            for (const auto& [k, c] : act_on_MN(w, qp, src, m->at(row, col))) {
              image[{static_cast<int>(col), k.first, k.second}] = c;
            }
          }
          ++r.preimages;
          span.insert(image);
          const auto hit = image.find({0, 0, 0});
          if (hit != image.end()) degree_zero.insert(Span::Vec{*hit});
        }
      }
    }
  }
  r.span_rank = span.rank();
  r.degree_zero_rank = degree_zero.rank();
  r.pass = !span.contains(Span::Vec{{{0, 0, 0}, Rational(1)}});
  return r;
}

WitnessChain run_witness_chain(const GwaAlgebra& w, const QuotientPair& qp) {
  WitnessChain c;
  c.epsilon = epsilon_annihilation(w, qp);
  if (!c.epsilon.pass) return c;
  c.cycle = witness_cycle(w, qp);
  if (!c.cycle.pass) return c;
  c.boundary = not_boundary(w, qp);
  return c;
}

}  // namespace gwalab
