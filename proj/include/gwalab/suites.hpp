#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gwalab/envelope.hpp"
#include "gwalab/sampler.hpp"

namespace gwalab {

/// Outcome counts of one identity across all trials.
struct Tally {
  std::string name;
  std::string anchor;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::size_t> first_failure;
  bool pass() const { return failed == 0 && passed > 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<Tally> tallies;
  bool pass() const;
  void merge(const Report& trial_report, std::size_t trial);
};

using Trial = std::function<Report(Sampler&, std::size_t)>;

/// Runs trials across threads; merging is ordered by trial index.
SuiteReport run_trials(const std::string& suite, std::uint64_t seed, std::size_t trials, const Trial& trial);
SuiteReport run_trials_serial(const std::string& suite, std::uint64_t seed, std::size_t trials,
                              const Trial& trial);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 0;  // 0 selects the suite default
  int max_degree = 0;      // 0 selects the suite default
  int depth = 5;
};

/// Total derivative, the σ⊗σ expansion of d zᵢ, μΔᵢ = ∂ᵢ, μ(J_nc) = J and the four Δᵢ/∂ᵢ identities.
SuiteReport calculus_suite(const SuiteOptions& o);
/// Homotopy identities, d² = 0 on Tot, alternation, and the two worked products, on random W.
SuiteReport homotopy_suite(const SuiteOptions& o);
/// Same checks on one fixed algebra.
Report homotopy_checks(const GwaAlgebra& w, int depth);
/// Verdicts on the fixture set, certificate expansion, σ-independence.
SuiteReport smoothness_suite(const SuiteOptions& o);
/// d(build_n(d n′)) = d n′ with every m a cocycle; instances default to the three built-in smooth ones.
SuiteReport roundtrip_suite(const SuiteOptions& o, const std::vector<GwaAlgebra>& instances = {});
/// ν multiplicative, Φ-compatibility on both sides, CY classification.
SuiteReport nakayama_suite(const SuiteOptions& o, const std::optional<GwaAlgebra>& instance = std::nullopt);
/// Witness chain for z1², z1z2 under random σ, and the φ = 0 short circuit.
SuiteReport witness_suite(const SuiteOptions& o);

std::vector<GwaAlgebra> builtin_smooth_instances();

}  // namespace gwalab
