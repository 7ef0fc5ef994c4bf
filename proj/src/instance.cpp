#include "gwalab/instance.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "gwalab/errors.hpp"

namespace gwalab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

const std::set<std::string> kReserved = {"x", "y", "z1", "z2", "elem1", "elem2", "affine", "id"};

}  // namespace

InstanceSpec parse_instance_spec(const std::string& text) {
  InstanceSpec spec;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  enum class Section { Main, Relations, Map } section = Section::Main;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::size_t indent = line.find_first_not_of(" \t") + 1;
    if (body.front() == '[' && body.back() == ']') {
      const std::string name = trim(body.substr(1, body.size() - 2));
      if (name == "relations") {
        section = Section::Relations;
      } else if (name == "map") {
        section = Section::Map;
      } else {
        throw ParseError("unknown section '" + name + "'", line_no, indent);
      }
      continue;
    }
    if (section == Section::Relations) {
      spec.relations.push_back({body, {line_no, indent}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no, indent);
    const std::string key = trim(line.substr(0, eq));
    const std::string rest = line.substr(eq + 1);
    const auto off = rest.find_first_not_of(" \t");
    const SourceText value{trim(rest), {line_no, eq + 2 + (off == std::string::npos ? 0 : off)}};
    if (!is_identifier(key)) throw ParseError("bad key '" + key + "'", line_no, indent);
    if (value.text.empty()) throw ParseError("missing value for '" + key + "'", line_no, eq + 1);
    if (section == Section::Map) {
      spec.map.emplace_back(key, value);
    } else if (key == "phi") {
      spec.phi = value;
    } else if (key == "sigma") {
      spec.sigma = value;
    } else if (key == "lambda") {
      spec.lambda = value;
    } else if (key == "name") {
      spec.name = value.text;
    } else if (key == "description") {
      spec.description = value.text;
    } else if (key == "status") {
      spec.status = value.text;
    } else if (key == "specialize") {
      spec.specializations.push_back(value);
    } else {
      if (kReserved.count(key)) throw ParseError("'" + key + "' is reserved", line_no, indent);
      spec.parameters.emplace_back(key, value);
    }
  }
  return spec;
}

InstanceSpec load_instance_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  InstanceSpec spec = parse_instance_spec(ss.str());
  if (spec.name.empty()) {
    const auto slash = path.find_last_of('/');
    std::string base = path.substr(slash == std::string::npos ? 0 : slash + 1);
    if (const auto dot = base.rfind('.'); dot != std::string::npos) base.erase(dot);
    spec.name = base;
  }
  return spec;
}

Bindings parse_bindings(const SourceText& src) {
  Bindings b;
  std::size_t start = 0;
  const std::string& t = src.text;
  while (start <= t.size()) {
    const auto comma = t.find(',', start);
    const std::string item = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const SourcePos pos{src.pos.line, src.pos.column + start};
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'name=value'", pos.line, pos.column);
    const std::string key = trim(item.substr(0, eq));
    if (!is_identifier(key) || kReserved.count(key)) {
      throw ParseError("bad parameter name '" + key + "'", pos.line, pos.column);
    }
    b[key] = eval_constant(parse_expr({item.substr(eq + 1), {pos.line, pos.column + eq + 1}}), b);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return b;
}

Instance realize(const InstanceSpec& spec, const Bindings& overrides) {
  if (spec.status == "template") throw Error("entry '" + spec.name + "' is a template without GWA data");
  Bindings params = overrides;
  for (const auto& [key, value] : spec.parameters) {
    if (!overrides.count(key)) params[key] = eval_constant(parse_expr(value), params);
  }
  if (!spec.phi) throw ParseError("missing 'phi'", 1, 1);
  const Poly2 phi = eval_poly(parse_expr(*spec.phi), params);
  const AutWord sigma = spec.sigma ? build_word(parse_word(*spec.sigma), params) : AutWord::identity();
  Instance inst{spec.name, GwaAlgebra(sigma, phi), std::nullopt, params};
  if (spec.lambda) {
    std::string t = spec.lambda->text;
    SourcePos pos = spec.lambda->pos;
    if (!t.empty() && t.front() == '(' && t.back() == ')') {
      t = t.substr(1, t.size() - 2);
      ++pos.column;
    }
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw ParseError("lambda needs two coordinates", pos.line, pos.column);
    const Rational l1 = eval_constant(parse_expr({t.substr(0, comma), pos}), params);
    const Rational l2 =
        eval_constant(parse_expr({t.substr(comma + 1), {pos.line, pos.column + comma + 1}}), params);
    inst.lambda = std::make_pair(l1, l2);
  }
  return inst;
}

}  // namespace gwalab
