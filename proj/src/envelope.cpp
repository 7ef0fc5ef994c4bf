#include "gwalab/envelope.hpp"

#include <sstream>

#include "gwalab/errors.hpp"
#include "gwalab/nccalc.hpp"

namespace gwalab {

EnvElem EnvElem::term(int n, int m, const Poly4& t) {
  EnvElem e;
  e.add({n, m}, t);
  return e;
}

EnvElem EnvElem::tensor(const GwaElem& u, const GwaElem& v) {
  EnvElem e;
  for (const auto& [n, a] : u.components()) {
    for (const auto& [m, b] : v.components()) e.add({n, m}, gwalab::tensor(a, b));
  }
  return e;
}

Poly4 EnvElem::coefficient(int n, int m) const {
  auto it = parts_.find({n, m});
  return it == parts_.end() ? Poly4() : it->second;
}

void EnvElem::add(const Key& key, const Poly4& t) {
  if (t.is_zero()) return;
  auto [it, inserted] = parts_.try_emplace(key, t);
  if (!inserted) {
    it->second += t;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

std::size_t EnvElem::term_count() const {
  std::size_t n = 0;
  for (const auto& [k, t] : parts_) n += t.size();
  return n;
}

EnvElem& EnvElem::operator+=(const EnvElem& o) {
  for (const auto& [k, t] : o.parts_) add(k, t);
  return *this;
}

EnvElem& EnvElem::operator-=(const EnvElem& o) {
  for (const auto& [k, t] : o.parts_) add(k, -t);
  return *this;
}

EnvElem& EnvElem::operator*=(const Rational& s) {
  if (gwalab::is_zero(s)) {
    parts_.clear();
    return *this;
  }
  for (auto& [k, t] : parts_) t *= s;
  return *this;
}

EnvElem EnvElem::operator-() const {
  EnvElem r = *this;
  r *= Rational(-1);
  return r;
}

EnvElem env_mul(const GwaAlgebra& w, const EnvElem& a, const EnvElem& b) {
  EnvElem r;
  const AutWord& s = w.sigma();
  for (const auto& [ka, pa] : a.components()) {
    const auto [n, m] = ka;
    for (const auto& [kb, pb] : b.components()) {
      const auto [p, q] = kb;
      Poly4 prod = twist_sides(pa, 0, q, s) * twist_sides(pb, n, 0, s);
      const Poly2& left_k = w.kappa(n, p);
      const Poly2& right_k = w.kappa(q, m);
      if (!left_k.is_constant() || !right_k.is_constant() || left_k.constant_term() != 1 ||
          right_k.constant_term() != 1) {
        prod *= gwalab::tensor(left_k, right_k);
      }
      r.add({n + p, q + m}, prod);
    }
  }
  return r;
}

EnvElem env_mul(const GwaAlgebra& w, std::initializer_list<EnvElem> factors) {
  EnvElem r(Poly4(1));
  for (const auto& f : factors) r = env_mul(w, r, f);
  return r;
}

GwaElem env_mu(const GwaAlgebra& w, const EnvElem& a) {
  GwaElem r;
  for (const auto& [k, t] : a.components()) {
    const auto [n, m] = k;
    for (const auto& [e, c] : t.terms()) {
      Poly2 left_part = Poly2::monomial({e[0], e[1]}, c);
      Poly2 right_part = Poly2::monomial({e[2], e[3]});
      r += multiply(w, GwaElem::term(n, left_part), GwaElem::term(m, right_part));
    }
  }
  return r;
}

std::string to_string(const EnvElem& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, t] : e.components()) {
    if (!first) os << " + ";
    first = false;
    os << "[" << k.first << "," << k.second << "](" << to_string(t) << ")";
  }
  return os.str();
}

EnvMatrix::EnvMatrix(std::initializer_list<std::initializer_list<EnvElem>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

EnvMatrix EnvMatrix::identity(std::size_t n) {
  EnvMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = EnvElem(Poly4(1));
  return m;
}

bool EnvMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

EnvMatrix& EnvMatrix::operator+=(const EnvMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

namespace {

void check_shapes(const EnvMatrix& outer, const EnvMatrix& inner) {
  if (inner.cols() != outer.rows()) {
    throw DimensionMismatch("cannot compose " + std::to_string(outer.rows()) + "x" +
                            std::to_string(outer.cols()) + " after " +
                            std::to_string(inner.rows()) + "x" + std::to_string(inner.cols()));
  }
}

EnvElem product_entry(const GwaAlgebra& w, const EnvMatrix& outer, const EnvMatrix& inner,
                      std::size_t r, std::size_t c) {
  EnvElem sum;
  for (std::size_t k = 0; k < inner.cols(); ++k) {
    const EnvElem& a = inner.at(r, k);
    const EnvElem& b = outer.at(k, c);
    if (a.is_zero() || b.is_zero()) continue;
    sum += env_mul(w, a, b);
  }
  return sum;
}

}  // namespace

EnvMatrix compose_serial(const GwaAlgebra& w, const EnvMatrix& outer, const EnvMatrix& inner) {
  check_shapes(outer, inner);
  EnvMatrix out(inner.rows(), outer.cols());
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) = product_entry(w, outer, inner, r, c);
  }
  return out;
}

EnvMatrix compose(const GwaAlgebra& w, const EnvMatrix& outer, const EnvMatrix& inner) {
  check_shapes(outer, inner);
  EnvMatrix out(inner.rows(), outer.cols());
  const auto total = static_cast<long>(out.rows() * out.cols());
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < total; ++idx) {
    const auto r = static_cast<std::size_t>(idx) / out.cols();
    const auto c = static_cast<std::size_t>(idx) % out.cols();
    out.at(r, c) = product_entry(w, outer, inner, r, c);
  }
  return out;
}

std::string to_string(const EnvMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " ; " : "") << to_string(m.at(r, c));
    os << "]\n";
  }
  return os.str();
}

std::size_t module_rank(int p, int q) {
  if (p == 0) return q == 1 ? 2 : 1;
  return q == 1 ? 4 : 2;
}

int base_column(int p) {
  if (p < 3) return p;
  return p % 2 == 1 ? 1 : 2;
}

std::string diff_name(DiffKind kind, int p, int q) {
  const char* prefix = kind == DiffKind::Vertical ? "dv" : kind == DiffKind::Horizontal ? "dh" : "t";
  return std::string(prefix) + std::to_string(p) + std::to_string(q);
}

namespace {

using gens::x_left;
using gens::x_right;
using gens::y_left;
using gens::y_right;

struct Builder {
  const GwaAlgebra& w;
  const AutWord& s;

  EnvElem mul(std::initializer_list<EnvElem> f) const { return env_mul(w, f); }
  // σ^l(z)⊗1 − 1⊗σ^r(z).
  EnvElem d(int axis, int l, int r) const { return EnvElem(twisted_diff(axis, l, r, s)); }
  // (σ^l ⊗ σ^r)Δ_axis(g).
  EnvElem D(const Poly2& g, int axis, int l = 0, int r = 0) const {
    return EnvElem(twist_sides(delta(g, axis), l, r, s));
  }

  std::map<std::tuple<DiffKind, int, int>, EnvMatrix> build() const {
    const Poly2& phi = w.phi();
    const Poly2& f1 = s.f1();
    const Poly2& f2 = s.f2();
    const EnvElem jnc(nc_jacobian(s));
    const EnvElem zero;
    std::map<std::tuple<DiffKind, int, int>, EnvMatrix> m;
    auto put = [&](DiffKind k, int p, int q, EnvMatrix mat) { m[{k, p, q}] = std::move(mat); };
    using DK = DiffKind;

    put(DK::Vertical, 0, 0, {{d(1, 0, 0)}, {d(2, 0, 0)}});
    put(DK::Vertical, 0, 1, {{-d(2, 0, 0), d(1, 0, 0)}});
    put(DK::Vertical, 1, 0,
        {{d(1, 1, 0), zero}, {d(2, 1, 0), zero}, {zero, d(1, 0, 1)}, {zero, d(2, 0, 1)}});
    put(DK::Vertical, 1, 1,
        {{-d(2, 1, 0), d(1, 1, 0), zero, zero}, {zero, zero, -d(2, 0, 1), d(1, 0, 1)}});
    put(DK::Vertical, 2, 0,
        {{d(1, 0, 0), zero}, {d(2, 0, 0), zero}, {zero, d(1, 1, 1)}, {zero, d(2, 1, 1)}});
    put(DK::Vertical, 2, 1,
        {{-d(2, 0, 0), d(1, 0, 0), zero, zero}, {zero, zero, -d(2, 1, 1), d(1, 1, 1)}});

    put(DK::Horizontal, 0, 0, {{x_right() - x_left()}, {y_right() - y_left()}});
    const EnvElem d1f1 = D(f1, 1);
    const EnvElem d2f1 = D(f1, 2);
    const EnvElem d1f2 = D(f2, 1);
    const EnvElem d2f2 = D(f2, 2);
    put(DK::Horizontal, 0, 1,
        {{x_left() - mul({x_right(), d1f1}), -mul({x_right(), d2f1})},
         {-mul({x_right(), d1f2}), x_left() - mul({x_right(), d2f2})},
         {-y_right() + mul({y_left(), d1f1}), mul({y_left(), d2f1})},
         {mul({y_left(), d1f2}), -y_right() + mul({y_left(), d2f2})}});
    put(DK::Horizontal, 0, 2,
        {{-x_left() + mul({x_right(), jnc})}, {y_right() - mul({y_left(), jnc})}});
    const EnvMatrix h1{{y_left(), x_right()}, {y_right(), x_left()}};
    put(DK::Horizontal, 1, 0, h1);
    put(DK::Horizontal, 1, 1,
        {{-y_left(), zero, -x_right(), zero},
         {zero, -y_left(), zero, -x_right()},
         {-y_right(), zero, -x_left(), zero},
         {zero, -y_right(), zero, -x_left()}});
    put(DK::Horizontal, 1, 2, h1);
    const EnvMatrix h2{{-x_left(), x_right()}, {y_right(), -y_left()}};
    put(DK::Horizontal, 2, 0, h2);
    put(DK::Horizontal, 2, 1,
        {{x_left(), zero, -x_right(), zero},
         {zero, x_left(), zero, -x_right()},
         {-y_right(), zero, y_left(), zero},
         {zero, -y_right(), zero, y_left()}});
    put(DK::Horizontal, 2, 2, h2);

    const EnvElem d1 = D(phi, 1);
    const EnvElem d2 = D(phi, 2);
    const EnvElem b1 = D(phi, 1, 1, 1);
    const EnvElem b2 = D(phi, 2, 1, 1);
    const EnvElem l1 = D(phi, 1, 1, 0);
    const EnvElem l2 = D(phi, 2, 1, 0);
    const EnvElem r1 = D(phi, 1, 0, 1);
    const EnvElem r2 = D(phi, 2, 0, 1);
    put(DK::Homotopy, 0, 1,
        {{d1, d2}, {mul({b1, d1f1}) + mul({b2, d1f2}), mul({b1, d2f1}) + mul({b2, d2f2})}});
    put(DK::Homotopy, 0, 2, {{-d2}, {d1}, {-mul({jnc, b2})}, {mul({jnc, b1})}});
    put(DK::Homotopy, 1, 1, {{l1, l2, zero, zero}, {zero, zero, r1, r2}});
    put(DK::Homotopy, 1, 2, {{-l2, zero}, {l1, zero}, {zero, -r2}, {zero, r1}});
    put(DK::Homotopy, 2, 1, {{d1, d2, zero, zero}, {zero, zero, b1, b2}});
    put(DK::Homotopy, 2, 2, {{-d2, zero}, {d1, zero}, {zero, -b2}, {zero, b1}});
    return m;
  }
};

}  // namespace

DifferentialSet::DifferentialSet(const GwaAlgebra& w, int depth) : w_(w), depth_(depth) {
  if (!w.phi_regular()) throw ZeroPhi();
  if (depth < 4) throw Error("depth must be at least 4");
  auto base = Builder{w_, w_.sigma()}.build();
  for (int p = 0; p <= depth; ++p) {
    for (const auto& [key, mat] : base) {
      const auto& [kind, bp, q] = key;
      if (bp == base_column(p)) mats_[{kind, p, q}] = mat;
    }
  }
}

bool DifferentialSet::has(DiffKind kind, int p, int q) const {
  if (p < 0) return false;
  switch (kind) {
    case DiffKind::Vertical:
      return q == 0 || q == 1;
    case DiffKind::Horizontal:
      return q >= 0 && q <= 2;
    case DiffKind::Homotopy:
      return q == 1 || q == 2;
  }
  return false;
}

const EnvMatrix& DifferentialSet::get(DiffKind kind, int p, int q) const {
  if (!has(kind, p, q)) throw Error("no differential " + diff_name(kind, p, q));
  auto it = mats_.find({kind, p, q});
  if (it == mats_.end()) it = mats_.find({kind, base_column(p), q});
  return it->second;
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

namespace {

struct Term {
  DiffKind outer_kind;
  int op;
  int oq;
  DiffKind inner_kind;
  int ip;
  int iq;
};

std::string describe(const std::vector<Term>& terms) {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    s += diff_name(t.outer_kind, t.op, t.oq) + "*" + diff_name(t.inner_kind, t.ip, t.iq);
  }
  return s + " = 0";
}

CheckResult check_sum(const DifferentialSet& ds, const std::vector<Term>& terms,
                      const std::string& anchor) {
  std::vector<Term> valid;
  for (const auto& t : terms) {
    if (ds.has(t.outer_kind, t.op, t.oq) && ds.has(t.inner_kind, t.ip, t.iq)) valid.push_back(t);
  }
  CheckResult r{describe(valid), anchor, true};
  if (valid.empty()) return r;
  EnvMatrix sum;
  bool first = true;
  for (const auto& t : valid) {
    EnvMatrix c = compose(ds.algebra(), ds.get(t.outer_kind, t.op, t.oq),
                          ds.get(t.inner_kind, t.ip, t.iq));
    if (first) {
      sum = std::move(c);
      first = false;
    } else {
      sum += c;
    }
  }
  r.pass = sum.is_zero();
  return r;
}

}  // namespace

Report verify_homotopy(const DifferentialSet& ds) {
  using DK = DiffKind;
  std::vector<std::pair<std::vector<Term>, std::string>> jobs;
  for (int p = 0; p <= ds.depth(); ++p) {
    jobs.push_back({{{DK::Vertical, p, 0, DK::Vertical, p, 1}}, "d_v^2 = 0"});
    for (int q = 0; q <= 1; ++q) {
      jobs.push_back({{{DK::Horizontal, p, q, DK::Vertical, p + 1, q},
                       {DK::Vertical, p, q, DK::Horizontal, p, q + 1}},
                      "d_h d_v + d_v d_h = 0"});
    }
    for (int q = 0; q <= 2; ++q) {
      jobs.push_back({{{DK::Horizontal, p, q, DK::Horizontal, p + 1, q},
                       {DK::Vertical, p, q, DK::Homotopy, p, q + 1},
                       {DK::Homotopy, p, q, DK::Vertical, p + 2, q - 1}},
                      "d_h^2 + d_v t + t d_v = 0"});
    }
    for (int q = 1; q <= 2; ++q) {
      jobs.push_back({{{DK::Horizontal, p, q, DK::Homotopy, p + 1, q},
                       {DK::Homotopy, p, q, DK::Horizontal, p + 2, q - 1}},
                      "d_h t + t d_h = 0"});
    }
    jobs.push_back({{{DK::Homotopy, p, 2, DK::Homotopy, p + 2, 1}}, "t^2 = 0"});
  }
  Report report;
  report.checks.resize(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    report.checks[i] = check_sum(ds, jobs[i].first, jobs[i].second);
  }
  return report;
}

EnvMatrix total_differential(const DifferentialSet& ds, int n) {
  auto summands = [](int deg) {
    std::vector<std::pair<int, int>> s;
    for (int q = 2; q >= 0; --q) {
      if (deg - q >= 0) s.emplace_back(deg - q, q);
    }
    return s;
  };
  const auto src = summands(n);
  const auto dst = summands(n - 1);
  std::vector<std::size_t> src_off{0};
  std::vector<std::size_t> dst_off{0};
  for (auto [p, q] : src) src_off.push_back(src_off.back() + module_rank(p, q));
  for (auto [p, q] : dst) dst_off.push_back(dst_off.back() + module_rank(p, q));
  EnvMatrix m(src_off.back(), dst_off.back());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto [p, q] = src[i];
    for (std::size_t j = 0; j < dst.size(); ++j) {
      const auto [tp, tq] = dst[j];
      const EnvMatrix* block = nullptr;
      if (tp == p && tq == q - 1) block = &ds.dv(tp, tq);
      if (tp == p - 1 && tq == q) block = &ds.dh(tp, tq);
      if (tp == p - 2 && tq == q + 1) block = &ds.t(tp, tq);
      if (block == nullptr) continue;
      for (std::size_t r = 0; r < block->rows(); ++r) {
        for (std::size_t c = 0; c < block->cols(); ++c) {
          m.at(src_off[i] + r, dst_off[j] + c) = block->at(r, c);
        }
      }
    }
  }
  return m;
}

Report total_d_squared(const DifferentialSet& ds) {
  Report report;
  const GwaAlgebra& w = ds.algebra();
  const EnvMatrix d1 = total_differential(ds, 1);
  bool aug = true;
  for (std::size_t r = 0; r < d1.rows(); ++r) aug = aug && env_mu(w, d1.at(r, 0)).is_zero();
  report.checks.push_back({"mu * Tot d_1 = 0", "augmentation via mu", aug});
  for (int n = 2; n <= ds.depth(); ++n) {
    const EnvMatrix sq = compose(w, total_differential(ds, n - 1), total_differential(ds, n));
    report.checks.push_back({"Tot d_" + std::to_string(n - 1) + " * Tot d_" + std::to_string(n) + " = 0",
                             "d = d_v + d_h + t squares to zero", sq.is_zero()});
  }
  for (int n = 4; n <= ds.depth(); ++n) {
    report.checks.push_back({"Tot d_" + std::to_string(n) + " = Tot d_" + std::to_string(n + 2),
                             "Tot alternates from degree 3",
                             total_differential(ds, n) == total_differential(ds, n + 2)});
  }
  return report;
}

}  // namespace gwalab
