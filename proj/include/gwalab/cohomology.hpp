#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwalab/envelope.hpp"
#include "gwalab/ideal.hpp"

namespace gwalab {

/// A 3-cochain of Tot Hom(P, W^e): components on P12, P21, P30.
struct Cochain3 {
  std::array<EnvElem, 2> n12;
  std::array<EnvElem, 4> n21;
  std::array<EnvElem, 2> n30;
  friend bool operator==(const Cochain3&, const Cochain3&) = default;
};

/// A 4-cochain: components on P22, P31, P40.
struct Cochain4 {
  std::array<EnvElem, 2> m22;
  std::array<EnvElem, 4> m31;
  std::array<EnvElem, 2> m40;
  friend bool operator==(const Cochain4&, const Cochain4&) = default;
  bool is_zero() const;
};

/// Coboundary machinery with M = W^e; cochain maps act as m = Mat·n on columns.
class CochainComplex {
 public:
  explicit CochainComplex(const GwaAlgebra& w);

  const GwaAlgebra& algebra() const { return ds_.algebra(); }
  const DifferentialSet& differentials() const { return ds_; }

  Cochain4 cochain_d3(const Cochain3& n) const;
  /// Left-hand sides of the eight cocycle equations.
  std::array<EnvElem, 8> cocycle_residuals(const Cochain4& m) const;
  Report is_cocycle4(const Cochain4& m) const;
  /// The coboundary preimage built from a smoothness certificate; throws NotACocycle.
  Cochain3 build_n(const Certificate& cert, const Cochain4& m) const;

 private:
  DifferentialSet ds_;
};

/// One summand of E₁: classes Σ a·eₙ⊗eₘ keyed by (n,m), coefficient on the left.
using E1Vec = std::map<std::pair<int, int>, Poly2>;

struct E12Vec {
  E1Vec first;
  E1Vec second;
  friend bool operator==(const E12Vec&, const E12Vec&) = default;
};

/// Normal form of a W^e element in the summand whose relations are σ^s(b)w'⊗w'' ≡ w'⊗w''b.
E1Vec normalize_class(const GwaAlgebra& w, const EnvElem& e, int shift);
EnvElem class_to_env(const E1Vec& v);
void add_to(E1Vec& v, const std::pair<int, int>& key, const Poly2& c);
E1Vec subtract(const E1Vec& a, const E1Vec& b);

/// d⁰ = (−x⊗1 + J⊗x ; 1⊗y − Jy⊗1).
E12Vec e1_d0(const GwaAlgebra& w, const E1Vec& v);
/// d¹ = ((y⊗1, 1⊗x) ; (1⊗y, x⊗1)).
std::pair<E1Vec, E1Vec> e1_d1(const GwaAlgebra& w, const E12Vec& v);

/// A class in E₁¹² ∩ ker d¹ given by its kernel parameters, or in canonical form.
/// a1: (i,j), i,j ≥ 1 at aⁱxⁱ⊗xʲ; a2: (i,j), i ≥ 1, j ≥ 0 at xⁱ⊗yʲ; a3: (i,j), i ≥ 0, j ≥ 1 at
/// yⁱ⊗xʲ; b4: (i,j), i,j ≥ 1, the yⁱ⊗yʲ coefficient of the second component.
/// c1: i ≥ 1 for the block cxⁱ⊗1; c2: i ≥ 1 for the block cyⁱ⊗x.
struct E12Class {
  std::map<std::pair<int, int>, Poly2> a1, a2, a3, b4;
  std::map<int, Poly2> c1, c2;
  bool is_canonical() const { return a1.empty() && a2.empty() && a3.empty() && b4.empty(); }
  bool is_zero() const;
  friend bool operator==(const E12Class&, const E12Class&) = default;
};

E12Vec class_vector(const GwaAlgebra& w, const E12Class& x);
/// Reads kernel parameters back from a kernel vector; throws if the vector is not of that form.
E12Class class_from_vector(const GwaAlgebra& w, const E12Vec& v);

/// One rewrite move on a block: the block's first-component position, its parameter
/// (a for the a-families, b for the b4 family) and the d⁰ witness relating old and new.
struct RewriteStep {
  E12Class before;
  E12Class after;
  E1Vec witness;
};
/// Moves a single block one step toward the canonical shape (no-op steps are not produced).
std::vector<RewriteStep> rewrite_trace(const GwaAlgebra& w, const E12Class& x);

/// Unique representative Σ c¹ᵢ(xⁱ⊗1, …) + Σ c²ᵢ(yⁱ⊗x, …) modulo im d⁰.
E12Class canonicalize_E12(const GwaAlgebra& w, const E12Class& x, std::size_t budget = 100000);

/// Φ(ȳ) = Σ Jⁱσ⁻¹(c¹ᵢ)x^{i−1} + Σ J⁻ⁱc²ᵢyⁱ.
GwaElem phi_map(const GwaAlgebra& w, const E12Class& y);

enum class Side { Left, Right };
enum class Generator { X, Y, Z1, Z2 };
GwaElem generator_elem(Generator g);
std::string to_string(Generator g);

/// ȳ◁w (right: first factor times w) or w▷ȳ (left: w times second factor), re-canonicalized.
E12Class bimodule_action(const GwaAlgebra& w, const E12Class& y, Generator g, Side side);

}  // namespace gwalab
