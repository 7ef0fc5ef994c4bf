#include "gwalab/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "gwalab/errors.hpp"

#ifndef GWALAB_CATALOG_DIR
#define GWALAB_CATALOG_DIR "catalog"
#endif

namespace gwalab {

NakayamaImages nakayama_images(const GwaAlgebra& w) {
  return {nakayama_apply(w, GwaElem::x()), nakayama_apply(w, GwaElem::y()),
          nakayama_apply(w, GwaElem(z1())), nakayama_apply(w, GwaElem(z2()))};
}

AnalysisReport analyze(const GwaAlgebra& w, const std::optional<std::pair<Rational, Rational>>& lambda) {
  AnalysisReport r;
  r.phi_regular = w.phi_regular();
  r.verdict = smoothness_test(w);
  r.jacobian = w.jacobian();
  r.nakayama = nakayama_images(w);
  if (r.verdict.smooth) {
    r.calabi_yau = r.jacobian == 1;
    r.twisted_cy_dimension = 3;
    r.bv_applicable = true;
    r.notes.push_back(r.calabi_yau ? "Calabi-Yau of dimension 3 (J = 1)"
                                   : "twisted Calabi-Yau of dimension 3, not Calabi-Yau (J != 1)");
    r.notes.push_back("Nakayama automorphism is diagonal, hence semisimple: BV structure applies");
    return r;
  }
  if (r.verdict.reason == SmoothReason::ZeroPhi) {
    r.infinite_global_dimension = true;
    r.notes.push_back("phi = 0: W has infinite global dimension, not homologically smooth");
    return r;
  }
  r.lambda = lambda ? lambda : r.verdict.common_zero;
  if (!r.lambda) {
    r.notes.push_back("criterion says NOT_SMOOTH; witness unavailable over Q");
    return r;
  }
  try {
    r.witness = run_witness_chain(w, {r.lambda->first, r.lambda->second, 3});
  } catch (const NotACommonZero&) {
    r.notes.push_back("supplied lambda is not a common zero of phi, phi_1, phi_2");
    r.lambda.reset();
    return r;
  }
  if (r.witness->pass()) {
    r.infinite_global_dimension = true;
    r.notes.push_back("Tor_4(M,N) != 0 and Tot P is alternate: infinite global dimension");
  } else {
    r.notes.push_back("witness chain failed");
  }
  return r;
}

bool ValidationReport::pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& c) { return c.pass; });
}

ValidationReport validate_presentation(const InstanceSpec& entry, const Bindings& bindings) {
  const Instance inst = realize(entry, bindings);
  const GwaAlgebra& w = inst.algebra;
  std::map<std::string, GwaElem> images;
  for (const auto& [gen, text] : entry.map) images[gen] = eval_gwa(parse_expr(text), w, inst.parameters);
  ValidationReport report;
  for (std::size_t i = 0; i < entry.relations.size(); ++i) {
    const SourceText& rel = entry.relations[i];
    GwaElem value;
    if (const auto eq = rel.text.find('='); eq != std::string::npos) {
      const SourceText lhs{rel.text.substr(0, eq), rel.pos};
      const SourceText rhs{rel.text.substr(eq + 1), {rel.pos.line, rel.pos.column + eq + 1}};
      value = eval_gwa(parse_expr(lhs), w, inst.parameters, images) -
              eval_gwa(parse_expr(rhs), w, inst.parameters, images);
    } else {
      value = eval_gwa(parse_expr(rel), w, inst.parameters, images);
    }
    report.relations.push_back({rel.text, to_string(value), value.is_zero()});
    if (!value.is_zero()) throw RelationFails(i + 1);
  }
  return report;
}

std::string default_catalog_dir() {
  if (const char* env = std::getenv("GWA_LAB_CATALOG")) return env;
  return GWALAB_CATALOG_DIR;
}

std::vector<InstanceSpec> load_catalog(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.path().extension() == ".gwa") paths.push_back(f.path().string());
  }
  std::vector<InstanceSpec> out;
  for (const auto& p : paths) out.push_back(load_instance_spec(p));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

const InstanceSpec& find_entry(const std::vector<InstanceSpec>& catalog, const std::string& name) {
  for (const auto& e : catalog) {
    if (e.name == name) return e;
  }
  throw UnknownEntry(name);
}

std::vector<CatalogRun> run_catalog(const std::vector<InstanceSpec>& catalog, const std::string& name,
                                    const std::vector<Bindings>& specializations) {
  const InstanceSpec& entry = find_entry(catalog, name);
  if (entry.status == "template") {
    throw Inapplicable("entry '" + name + "' is a template; its GWA data has not been filled in");
  }
  std::vector<Bindings> specs = specializations;
  if (specs.empty()) {
    for (const auto& s : entry.specializations) specs.push_back(parse_bindings(s));
  }
  if (specs.empty()) specs.emplace_back();
  std::vector<CatalogRun> runs(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < specs.size(); ++i) {
    try {
      const Instance inst = realize(entry, specs[i]);
      runs[i].bindings = inst.parameters;
      runs[i].validation = validate_presentation(entry, specs[i]);
      runs[i].report = analyze(inst.algebra, inst.lambda);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return runs;
}

}  // namespace gwalab
