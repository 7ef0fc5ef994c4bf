#pragma once

#include <string>
#include <vector>

#include "gwalab/autword.hpp"
#include "gwalab/poly.hpp"

namespace gwalab {

/// One symbol of a twist label.
enum class Twist { Id, Sigma, SigmaInv, Partial1, Partial2 };

/// Composition of symbols; {Sigma, Partial1} means σ∘∂₁ (∂₁ applied first).
using TwistLabel = std::vector<Twist>;

/// Interprets a label as a linear map on B.
Poly2 apply_twist(const TwistLabel& label, const AutWord& sigma, const Poly2& p);
std::string to_string(const TwistLabel& label);

/// d g = g⊗1 − 1⊗g.
Poly4 nc_diff(const Poly2& g);

/// Noncommutative partial derivation Δ_axis.
Poly4 delta(const Poly2& g, int axis);

/// (u⊗v)∘Δ_axis.
Poly4 twisted_delta(const Poly2& g, int axis, const TwistLabel& u, const TwistLabel& v,
                    const AutWord& sigma);

/// Δ₁(f₁)Δ₂(f₂) − Δ₁(f₂)Δ₂(f₁).
Poly4 nc_jacobian(const AutWord& sigma);

/// σ^l(z)⊗1 − 1⊗σ^r(z) for z = z_axis.
Poly4 twisted_diff(int axis, int l, int r, const AutWord& sigma);

/// (σ^l ⊗ σ^r)(t).
Poly4 twist_sides(const Poly4& t, int l, int r, const AutWord& sigma);

}  // namespace gwalab
