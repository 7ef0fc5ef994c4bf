#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwalab/gwa.hpp"
#include "gwalab/poly.hpp"

namespace gwalab {

/// Reduced Gröbner basis under grevlex z1 > z2, with each element written over the inputs.
struct GBasis {
  std::vector<Poly2> generators;
  /// cofactors[i][k] is the coefficient of input k in generators[i].
  std::vector<std::vector<Poly2>> cofactors;
  std::string order = "grevlex(z1>z2)";
};

/// Leading exponent under grevlex z1 > z2 (which agrees with graded lex in two variables).
Exponent<2> leading_exponent(const Poly2& p);
Rational leading_coefficient(const Poly2& p);

GBasis buchberger(const std::vector<Poly2>& gens);

/// Remainder of p modulo a Gröbner basis.
Poly2 reduce(const Poly2& p, const std::vector<Poly2>& basis);

/// α·φ + β₁·φ₁ + β₂·φ₂ = 1.
struct Certificate {
  Poly2 alpha;
  Poly2 beta1;
  Poly2 beta2;
};

/// Σ cofactor_k · gens_k.
Poly2 combine(const std::vector<Poly2>& cofactors, const std::vector<Poly2>& gens);
bool verify_certificate(const Certificate& c, const Poly2& phi);

/// (true, cofactors) iff 1 lies in the ideal; the cofactors are re-checked by expansion.
std::pair<bool, std::optional<std::vector<Poly2>>> contains_one(const std::vector<Poly2>& gens);

/// Best-effort rational common zero of all polys, searching |numerator|, denominator ≤ bound.
std::optional<std::pair<Rational, Rational>> find_common_zero(const std::vector<Poly2>& polys,
                                                             int bound = 8);

enum class SmoothReason { None, ZeroPhi, ProperIdeal };

struct SmoothVerdict {
  bool smooth = false;
  std::optional<Certificate> certificate;
  SmoothReason reason = SmoothReason::None;
  std::optional<std::pair<Rational, Rational>> common_zero;
};

SmoothVerdict smoothness_test(const GwaAlgebra& w);
std::string to_string(SmoothReason r);

}  // namespace gwalab
