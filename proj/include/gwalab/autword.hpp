#pragma once

#include <array>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gwalab/poly.hpp"

namespace gwalab {

/// z_axis ↦ z_axis + shift, the other variable fixed. shift must not involve z_axis.
struct Elementary {
  int axis = 1;
  Poly2 shift;
};

/// z ↦ matrix·z + translation.
struct Affine {
  std::array<std::array<Rational, 2>, 2> matrix{{{1, 0}, {0, 1}}};
  std::array<Rational, 2> translation{0, 0};
};

using AutGenerator = std::variant<Elementary, Affine>;

Rational generator_jacobian(const AutGenerator& g);
AutGenerator invert_generator(const AutGenerator& g);
/// Images (g(z1), g(z2)).
std::pair<Poly2, Poly2> generator_images(const AutGenerator& g);
std::string to_string(const AutGenerator& g);

/// Polynomial automorphism σ of ℚ[z1,z2] given as g1∘g2∘…∘gk (gk applied first).
class AutWord {
 public:
  AutWord() : AutWord(std::vector<AutGenerator>{}) {}
  explicit AutWord(std::vector<AutGenerator> factors);

  static AutWord identity() { return AutWord(); }

  const std::vector<AutGenerator>& factors() const { return factors_; }
  const Poly2& f1() const { return images_[0]; }
  const Poly2& f2() const { return images_[1]; }
  const Rational& jacobian() const { return jacobian_; }

  AutWord inverse() const;
  /// (*this) ∘ other: other applied first.
  AutWord compose(const AutWord& other) const;

  /// σⁿ(p) for any integer n.
  Poly2 apply(const Poly2& p, int n = 1) const;
  /// σⁿ(z^e), memoized.
  const Poly2& apply_monomial(const Exponent<2>& e, int n) const;
  /// σⁿ(z1), σⁿ(z2).
  std::pair<Poly2, Poly2> power_images(int n) const;

  std::string to_string() const;

 private:
  struct Cache;

  std::vector<AutGenerator> factors_;
  std::array<Poly2, 2> images_;
  std::array<Poly2, 2> inverse_images_;
  Rational jacobian_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace gwalab
