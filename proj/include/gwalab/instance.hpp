#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwalab/expr.hpp"

namespace gwalab {

/// An instance or catalog file before parameters are substituted.
struct InstanceSpec {
  std::string name;
  std::string description;
  std::string status = "ready";  // "template" entries carry no usable GWA data
  std::optional<SourceText> phi;
  std::optional<SourceText> sigma;
  std::optional<SourceText> lambda;
  std::vector<std::pair<std::string, SourceText>> parameters;
  std::vector<SourceText> specializations;
  std::vector<SourceText> relations;
  std::vector<std::pair<std::string, SourceText>> map;
};

InstanceSpec parse_instance_spec(const std::string& text);
InstanceSpec load_instance_spec(const std::string& path);

struct Instance {
  std::string name;
  GwaAlgebra algebra;
  std::optional<std::pair<Rational, Rational>> lambda;
  Bindings parameters;
};

/// Substitutes parameters (overrides win over file defaults) and builds W.
Instance realize(const InstanceSpec& spec, const Bindings& overrides = {});

/// Reads `p=1, q=2` style bindings.
Bindings parse_bindings(const SourceText& src);

inline Instance parse_instance(const std::string& text) { return realize(parse_instance_spec(text)); }

}  // namespace gwalab
