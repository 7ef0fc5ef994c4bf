#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "gwalab/autword.hpp"
#include "gwalab/poly.hpp"

namespace gwalab {

/// W = B(σ,φ): xb = σ(b)x, yb = σ⁻¹(b)y, yx = φ, xy = σ(φ).
class GwaAlgebra {
 public:
  GwaAlgebra(AutWord sigma, Poly2 phi);

  const AutWord& sigma() const { return sigma_; }
  const Poly2& phi() const { return phi_; }
  const Poly2& sigma_phi() const { return sigma_phi_; }
  const Rational& jacobian() const { return sigma_.jacobian(); }
  bool phi_regular() const { return !phi_.is_zero(); }

  /// e_m e_n = kappa(m,n) e_{m+n}, where e_n = xⁿ (n>0), y⁻ⁿ (n<0), 1 (n=0).
  const Poly2& kappa(int m, int n) const;

 private:
  struct Cache;

  AutWord sigma_;
  Poly2 phi_;
  Poly2 sigma_phi_;
  std::shared_ptr<Cache> cache_;
};

/// Σ_n a_n e_n with coefficients on the left.
class GwaElem {
 public:
  using Components = std::map<int, Poly2>;

  GwaElem() = default;
  GwaElem(const Poly2& b) { add(0, b); }  // NOLINT(google-explicit-constructor)
  static GwaElem term(int degree, const Poly2& coefficient);
  static GwaElem x(int power = 1) { return term(power, Poly2(1)); }
  static GwaElem y(int power = 1) { return term(-power, Poly2(1)); }

  const Components& components() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  Poly2 coefficient(int degree) const;
  void add(int degree, const Poly2& coefficient);

  /// Coefficients aᵢ of yⁱ (i ≥ 1), a₀, and bⱼ of xʲ (j ≥ 1).
  std::map<int, Poly2> y_part() const;
  Poly2 mid() const { return coefficient(0); }
  std::map<int, Poly2> x_part() const;

  GwaElem& operator+=(const GwaElem& o);
  GwaElem& operator-=(const GwaElem& o);
  GwaElem& operator*=(const Rational& s);
  friend GwaElem operator+(GwaElem a, const GwaElem& b) { return a += b; }
  friend GwaElem operator-(GwaElem a, const GwaElem& b) { return a -= b; }
  friend GwaElem operator*(const Rational& s, GwaElem a) { return a *= s; }
  GwaElem operator-() const;
  friend bool operator==(const GwaElem& a, const GwaElem& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const GwaElem& a, const GwaElem& b) { return !(a == b); }

 private:
  Components parts_;
};

GwaElem multiply(const GwaAlgebra& w, const GwaElem& u, const GwaElem& v);
GwaElem graded_component(const GwaElem& w, int n);
GwaElem nakayama_apply(const GwaAlgebra& w, const GwaElem& e);
std::string to_string(const GwaElem& e);

}  // namespace gwalab
