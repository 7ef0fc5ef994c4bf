#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gwalab/autword.hpp"
#include "gwalab/gwa.hpp"

namespace gwalab {

/// Where a piece of text starts inside its file (1-based).
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct SourceText {
  std::string text;
  SourcePos pos;
};

struct Expr {
  enum class Kind { Number, Name, Add, Sub, Mul, Div, Neg, Pow, Call, List };
  Kind kind = Kind::Number;
  Rational value;           // Number, or the exponent of Pow
  std::string name;         // Name, Call
  std::vector<std::shared_ptr<const Expr>> args;
  SourcePos pos;
};
using ExprPtr = std::shared_ptr<const Expr>;

/// Parses one arithmetic expression: integers, names, + - * / ^, parentheses.
ExprPtr parse_expr(const SourceText& src);

/// Parses `gen ; gen ; ...` where gen is elem1(...), elem2(...), affine([[a,b],[c,d]],[e,f]) or id.
std::vector<ExprPtr> parse_word(const SourceText& src);

using Bindings = std::map<std::string, Rational>;

/// Evaluates in ℚ[z1,z2]; any other name must be bound. Division only by nonzero constants.
Poly2 eval_poly(const ExprPtr& e, const Bindings& params);
Rational eval_constant(const ExprPtr& e, const Bindings& params);

/// Evaluates in W with x, y, z1, z2, parameters, and extra named elements (for source generators).
GwaElem eval_gwa(const ExprPtr& e, const GwaAlgebra& w, const Bindings& params,
                 const std::map<std::string, GwaElem>& names = {});

/// Builds σ from a parsed word; ParseError points at the offending generator.
AutWord build_word(const std::vector<ExprPtr>& word, const Bindings& params);

inline Poly2 parse_poly(const std::string& text, const Bindings& params = {}) {
  return eval_poly(parse_expr({text, {}}), params);
}
inline AutWord parse_sigma(const std::string& text, const Bindings& params = {}) {
  return build_word(parse_word({text, {}}), params);
}

}  // namespace gwalab
