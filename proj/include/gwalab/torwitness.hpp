#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwalab/envelope.hpp"

namespace gwalab {

/// M = W/I_r with basis x̄ʲ (j ≥ 0) and N = W/I_l with basis ȳⁱ (i ≥ 0) over m = (z−λ).
struct QuotientPair {
  Rational lambda1;
  Rational lambda2;
  int truncation = 3;
};

/// Σ r·x̄ʲ⊗ȳⁱ keyed by (j,i).
using MNVec = std::map<std::pair<int, int>, Rational>;

/// Class of g in M (keeps degrees ≥ 0, evaluates left coefficients at λ).
std::map<int, Rational> class_in_M(const GwaAlgebra& w, const QuotientPair& qp, const GwaElem& g);
/// Class of g in N (keeps degrees ≤ 0, evaluates right coefficients at λ); key i for ȳⁱ.
std::map<int, Rational> class_in_N(const GwaAlgebra& w, const QuotientPair& qp, const GwaElem& g);

/// (x̄ʲ⊗ȳⁱ)·(w'⊗w'') = x̄ʲw' ⊗ w''ȳⁱ, extended linearly.
MNVec act_on_MN(const GwaAlgebra& w, const QuotientPair& qp, const MNVec& v, const EnvElem& e);

struct EpsilonReport {
  Rational image1;
  Rational image2;
  bool pass = false;
};

/// (ε⊗ε)(Δ₁φ) and (ε⊗ε)(Δ₂φ); throws NotACommonZero unless λ kills φ, φ₁, φ₂.
EpsilonReport epsilon_annihilation(const GwaAlgebra& w, const QuotientPair& qp);

struct CycleReport {
  std::vector<MNVec> t21_image;   // four components
  std::vector<MNVec> dh30_image;  // two components
  bool pass = false;
};

/// Images of (1̄⊗1̄, 0) ∈ M⊗P40⊗N under t21 and d^h30.
CycleReport witness_cycle(const GwaAlgebra& w, const QuotientPair& qp);

struct BoundaryReport {
  std::size_t preimages = 0;
  std::size_t span_rank = 0;
  std::size_t degree_zero_rank = 0;  // span projected onto the witness coordinate 1̄⊗1̄ in slot 0
  bool pass = false;  // (1̄⊗1̄, 0) lies outside the span of boundaries
};

/// Spans d^v40 and d^h40 images of all x̄ʲ⊗ȳⁱ (j,i ≤ truncation) and tests membership.
BoundaryReport not_boundary(const GwaAlgebra& w, const QuotientPair& qp);

struct WitnessChain {
  EpsilonReport epsilon;
  CycleReport cycle;
  BoundaryReport boundary;
  bool pass() const { return epsilon.pass && cycle.pass && boundary.pass; }
};

WitnessChain run_witness_chain(const GwaAlgebra& w, const QuotientPair& qp);

}  // namespace gwalab
