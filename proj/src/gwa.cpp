#include "gwalab/gwa.hpp"

#include <sstream>

namespace gwalab {

struct GwaAlgebra::Cache {
  std::mutex mutex;
  std::map<std::pair<int, int>, Poly2> kappa;
};

GwaAlgebra::GwaAlgebra(AutWord sigma, Poly2 phi)
    : sigma_(std::move(sigma)), phi_(std::move(phi)), cache_(std::make_shared<Cache>()) {
  sigma_phi_ = sigma_.apply(phi_, 1);
}

namespace {

// yⁱxⁱ = ∏_{k=0}^{i-1} σ^{-k}(φ).
Poly2 y_then_x(const GwaAlgebra& w, int i) {
  Poly2 r(1);
  for (int k = 0; k < i; ++k) r *= w.sigma().apply(w.phi(), -k);
  return r;
}

// xⁱyⁱ = ∏_{k=1}^{i} σ^k(φ).
Poly2 x_then_y(const GwaAlgebra& w, int i) {
  Poly2 r(1);
  for (int k = 1; k <= i; ++k) r *= w.sigma().apply(w.phi(), k);
  return r;
}

}  // namespace

const Poly2& GwaAlgebra::kappa(int m, int n) const {
  static const Poly2 one(1);
  if ((m >= 0 && n >= 0) || (m <= 0 && n <= 0)) return one;
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->kappa.find({m, n});
    if (it != cache_->kappa.end()) return it->second;
  }
  Poly2 value;
  if (m < 0) {
    const int i = -m;
    const int j = n;
    value = i <= j ? y_then_x(*this, i) : sigma_.apply(y_then_x(*this, j), -(i - j));
  } else {
    const int j = m;
    const int i = -n;
    value = j >= i ? sigma_.apply(x_then_y(*this, i), j - i) : x_then_y(*this, j);
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->kappa.try_emplace({m, n}, std::move(value)).first->second;
}

GwaElem GwaElem::term(int degree, const Poly2& coefficient) {
  GwaElem e;
  e.add(degree, coefficient);
  return e;
}

Poly2 GwaElem::coefficient(int degree) const {
  auto it = parts_.find(degree);
  return it == parts_.end() ? Poly2() : it->second;
}

void GwaElem::add(int degree, const Poly2& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = parts_.try_emplace(degree, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

std::map<int, Poly2> GwaElem::y_part() const {
  std::map<int, Poly2> r;
  for (const auto& [n, c] : parts_) {
    if (n < 0) r.emplace(-n, c);
  }
  return r;
}

std::map<int, Poly2> GwaElem::x_part() const {
  std::map<int, Poly2> r;
  for (const auto& [n, c] : parts_) {
    if (n > 0) r.emplace(n, c);
  }
  return r;
}

GwaElem& GwaElem::operator+=(const GwaElem& o) {
  for (const auto& [n, c] : o.parts_) add(n, c);
  return *this;
}

GwaElem& GwaElem::operator-=(const GwaElem& o) {
  for (const auto& [n, c] : o.parts_) add(n, -c);
  return *this;
}

GwaElem& GwaElem::operator*=(const Rational& s) {
  if (gwalab::is_zero(s)) {
    parts_.clear();
    return *this;
  }
  for (auto& [n, c] : parts_) c *= s;
  return *this;
}

GwaElem GwaElem::operator-() const {
  GwaElem r = *this;
  r *= Rational(-1);
  return r;
}

GwaElem multiply(const GwaAlgebra& w, const GwaElem& u, const GwaElem& v) {
  GwaElem r;
  for (const auto& [m, a] : u.components()) {
    for (const auto& [n, b] : v.components()) {
      r.add(m + n, a * w.sigma().apply(b, m) * w.kappa(m, n));
    }
  }
  return r;
}

GwaElem graded_component(const GwaElem& w, int n) { return GwaElem::term(n, w.coefficient(n)); }

GwaElem nakayama_apply(const GwaAlgebra& w, const GwaElem& e) {
  GwaElem r;
  for (const auto& [n, c] : e.components()) r.add(n, c * power(w.jacobian(), n));
  return r;
}

std::string to_string(const GwaElem& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : e.components()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (n > 0) os << "*x" << (n > 1 ? "^" + std::to_string(n) : "");
    if (n < 0) os << "*y" << (n < -1 ? "^" + std::to_string(-n) : "");
  }
  return os.str();
}

}  // namespace gwalab
