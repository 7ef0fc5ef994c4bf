#pragma once

#include <cstdint>
#include <random>

#include "gwalab/cohomology.hpp"

namespace gwalab {

/// Bounded random objects. Only raw engine outputs are used, so draws are identical on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return next() & 1U; }

  /// Nonzero rational with numerator and denominator height ≤ height.
  Rational coefficient(long height = 5);
  /// Up to `terms` monomials of total degree ≤ max_degree.
  Poly2 poly(int max_degree, int terms = 4);
  /// Nonzero polynomial.
  Poly2 nonzero_poly(int max_degree, int terms = 4);
  /// Polynomial in z_var only (var 1 or 2), degree ≤ max_degree.
  Poly2 poly_in(int var, int max_degree);
  Poly4 poly4(int max_degree, int terms = 2);

  /// Triangular words keep σⁿ degrees bounded; general words mix both elementary kinds.
  enum class WordStyle { General, Triangular };
  AutGenerator generator(WordStyle style);
  AutWord word(int max_length = 3, WordStyle style = WordStyle::General);

  GwaElem element(int max_abs_degree, int max_poly_degree);
  EnvElem env_elem(int max_abs_degree, int max_poly_degree);
  Cochain3 cochain3();
  E12Class canonical_class(int max_index = 3, int max_poly_degree = 2);

 private:
  std::mt19937_64 engine_;
};

/// Seed of trial i, drawn from a dedicated stream so trials are independent of scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

}  // namespace gwalab
