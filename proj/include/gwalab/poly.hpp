#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "gwalab/rational.hpp"

namespace gwalab {

template <std::size_t N>
using Exponent = std::array<std::uint32_t, N>;

/// Graded lexicographic order: total degree first, then lexicographic.
template <std::size_t N>
struct GradedLex {
  bool operator()(const Exponent<N>& a, const Exponent<N>& b) const {
    std::uint64_t da = 0;
    std::uint64_t db = 0;
    for (std::size_t i = 0; i < N; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse polynomial in N commuting variables with exact rational coefficients.
template <std::size_t N>
class Poly {
 public:
  using Exp = Exponent<N>;
  using Terms = std::map<Exp, Rational, GradedLex<N>>;

  Poly() = default;
  Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!gwalab::is_zero(c)) terms_.emplace(Exp{}, c);
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static Poly monomial(const Exp& e, const Rational& c = 1) {
    Poly p;
    if (!gwalab::is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }
  static Poly var(std::size_t i, std::uint32_t power = 1) {
    Exp e{};
    e[i] = power;
    return monomial(e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{});
  }
  Rational constant_term() const {
    auto it = terms_.find(Exp{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  long degree() const {
    if (terms_.empty()) return -1;
    const Exp& e = terms_.rbegin()->first;
    long d = 0;
    for (auto v : e) d += v;
    return d;
  }
  /// Largest exponent of variable i; -1 for zero.
  long degree_in(std::size_t i) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, e[i]);
    return d;
  }

  void add_term(const Exp& e, const Rational& c) {
    if (gwalab::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (gwalab::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (gwalab::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(int s, Poly a) { return a *= Rational(s); }
  friend Poly operator*(Poly a, int s) { return a *= Rational(s); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        prod = ca * cb;
        r.add_term(e, prod);
      }
    }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned n) const {
    Poly result(1);
    Poly base = *this;
    while (n > 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// Applies a linear map given on monomials, caching per exponent.
  template <std::size_t M>
  Poly<M> map_monomials(const std::function<Poly<M>(const Exp&)>& f) const {
    Poly<M> r;
    for (const auto& [e, c] : terms_) {
      Poly<M> img = f(e);
      img *= c;
      r += img;
    }
    return r;
  }

 private:
  Terms terms_;
};

using Poly2 = Poly<2>;
using Poly4 = Poly<4>;

inline Poly2 z1() { return Poly2::var(0); }
inline Poly2 z2() { return Poly2::var(1); }

/// Formal partial derivative; axis is 1 or 2.
Poly2 partial(const Poly2& p, int axis);

Rational eval(const Poly2& p, const Rational& l1, const Rational& l2);

/// p(f1, f2).
Poly2 substitute(const Poly2& p, const Poly2& f1, const Poly2& f2);

/// a ⊗ b, a ⊗ 1, 1 ⊗ a.
Poly4 tensor(const Poly2& a, const Poly2& b);
inline Poly4 left(const Poly2& a) { return tensor(a, Poly2(1)); }
inline Poly4 right(const Poly2& a) { return tensor(Poly2(1), a); }

/// Multiplication map B⊗B → B.
Poly2 mu(const Poly4& t);

/// Splits t as Σ z^a ⊗ (coefficient polynomial), keyed by the left exponent.
std::map<Exponent<2>, Poly2, GradedLex<2>> split_left(const Poly4& t);
/// Splits t as Σ (coefficient polynomial) ⊗ z^b, keyed by the right exponent.
std::map<Exponent<2>, Poly2, GradedLex<2>> split_right(const Poly4& t);

using Poly2Map = std::function<Poly2(const Poly2&)>;

/// (u ⊗ v)(t) for linear maps u, v on B (applied to each factor's monomials).
Poly4 apply_sides(const Poly4& t, const Poly2Map& u, const Poly2Map& v);

/// Evaluates both tensor factors at the same point.
Rational eval_both(const Poly4& t, const Rational& l1, const Rational& l2);

std::string to_string(const Poly2& p);
std::string to_string(const Poly4& p);

}  // namespace gwalab
