#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwalab/ideal.hpp"
#include "gwalab/instance.hpp"
#include "gwalab/torwitness.hpp"

namespace gwalab {

struct NakayamaImages {
  GwaElem x, y, z1, z2;
};

struct AnalysisReport {
  bool phi_regular = false;
  SmoothVerdict verdict;
  std::optional<std::pair<Rational, Rational>> lambda;
  std::optional<WitnessChain> witness;
  bool infinite_global_dimension = false;
  Rational jacobian;
  NakayamaImages nakayama;
  bool calabi_yau = false;
  std::optional<int> twisted_cy_dimension;
  bool bv_applicable = false;
  std::vector<std::string> notes;
};

/// ν(x)=Jx, ν(y)=J⁻¹y, ν|_B = id.
NakayamaImages nakayama_images(const GwaAlgebra& w);

/// Smoothness verdict, Nakayama data, CY classification, and the Tor witness when applicable.
AnalysisReport analyze(const GwaAlgebra& w,
                       const std::optional<std::pair<Rational, Rational>>& lambda = std::nullopt);

struct RelationCheck {
  std::string relation;
  std::string residual;
  bool pass = false;
};

struct ValidationReport {
  std::vector<RelationCheck> relations;
  bool pass() const;
};

/// Pushes each defining relation through the identification map into W's normal form.
/// Throws RelationFails at the first relation that does not vanish.
ValidationReport validate_presentation(const InstanceSpec& entry, const Bindings& bindings = {});

/// All entries in a catalog directory, sorted by name.
std::vector<InstanceSpec> load_catalog(const std::string& dir);
const InstanceSpec& find_entry(const std::vector<InstanceSpec>& catalog, const std::string& name);
std::string default_catalog_dir();

struct CatalogRun {
  Bindings bindings;
  ValidationReport validation;
  AnalysisReport report;
};

/// Validates and analyzes the entry at each specialization (file defaults when none given).
std::vector<CatalogRun> run_catalog(const std::vector<InstanceSpec>& catalog, const std::string& name,
                                    const std::vector<Bindings>& specializations = {});

}  // namespace gwalab
