#include "gwalab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "gwalab/errors.hpp"
#include "gwalab/pipeline.hpp"
#include "gwalab/suites.hpp"

namespace gwalab {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string file;
  std::string catalog_action;
  std::string entry;
  std::vector<std::string> specs;
  std::string catalog_dir;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  int max_degree = 0;
  int depth = 5;
  bool json = false;
};

std::string str(const Rational& q) { return to_string(q); }

Json json_of(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}});
  return checks;
}

Json json_of(const SuiteReport& s) {
  Json tallies = Json::array();
  for (const auto& t : s.tallies) {
    Json j{{"name", t.name}, {"anchor", t.anchor}, {"pass", t.pass()}, {"passed", t.passed}, {"failed", t.failed}};
    if (t.first_failure) j["first_failure"] = *t.first_failure;
    tallies.push_back(j);
  }
  return {{"suite", s.suite}, {"seed", s.seed}, {"trials", s.trials}, {"pass", s.pass()}, {"checks", tallies}};
}

Json json_of(const GwaAlgebra& w) {
  return {{"phi", to_string(w.phi())}, {"sigma", w.sigma().to_string()},
          {"f1", to_string(w.sigma().f1())}, {"f2", to_string(w.sigma().f2())}};
}

Json json_of(const AnalysisReport& a) {
  Json j;
  j["phi_regular"] = a.phi_regular;
  j["smooth"] = a.verdict.smooth;
  j["reason"] = to_string(a.verdict.reason);
  if (a.verdict.certificate) {
    const Certificate& c = *a.verdict.certificate;
    j["certificate"] = {{"alpha", to_string(c.alpha)}, {"beta1", to_string(c.beta1)}, {"beta2", to_string(c.beta2)}};
  } else {
    j["certificate"] = nullptr;
  }
  j["jacobian"] = str(a.jacobian);
  j["nakayama"] = {{"x", to_string(a.nakayama.x)}, {"y", to_string(a.nakayama.y)},
                   {"z1", to_string(a.nakayama.z1)}, {"z2", to_string(a.nakayama.z2)}};
  j["calabi_yau"] = a.calabi_yau;
  j["twisted_cy_dimension"] = a.twisted_cy_dimension ? Json(*a.twisted_cy_dimension) : Json(nullptr);
  j["bv_applicable"] = a.bv_applicable;
  j["infinite_global_dimension"] = a.infinite_global_dimension;
  j["lambda"] = a.lambda ? Json::array({str(a.lambda->first), str(a.lambda->second)}) : Json(nullptr);
  if (a.witness) {
    const WitnessChain& w = *a.witness;
    j["witness"] = {
        {"pass", w.pass()},
        {"epsilon", {{"anchor", "(ε_m⊗ε_m)(Δ₁(φ)) = (ε_m⊗ε_m)(Δ₂(φ)) = 0"},
                     {"image1", str(w.epsilon.image1)}, {"image2", str(w.epsilon.image2)}, {"pass", w.epsilon.pass}}},
        {"cycle", {{"anchor", "t₂₁(1̄⊗1̄,0) = 0 and d^h₃₀(1̄⊗1̄,0) = 0"}, {"pass", w.cycle.pass}}},
        {"boundary", {{"anchor", "(1̄⊗1̄,0) is not a boundary"},
                      {"preimages", w.boundary.preimages},
                      {"span_rank", w.boundary.span_rank},
                      {"degree_zero_rank", w.boundary.degree_zero_rank},
                      {"pass", w.boundary.pass}}}};
  } else {
    j["witness"] = nullptr;
  }
  j["notes"] = a.notes;
  return j;
}

// Flattens a JSON report into `key: value` lines.
void write_text(std::ostringstream& out, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) write_text(out, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) write_text(out, j[i], prefix + "[" + std::to_string(i) + "]");
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

std::string render(const Json& j, bool json) {
  if (json) return j.dump(2) + "\n";
  std::ostringstream out;
  write_text(out, j, "");
  return out.str();
}

SuiteOptions suite_options(const Options& o) { return {o.seed, o.trials, o.max_degree, o.depth}; }

struct Outcome {
  int code;
  Json report;
};

Outcome with_code(Json j, bool pass) {
  j["pass"] = pass;
  return {pass ? 0 : 1, std::move(j)};
}

Instance load(const Options& o) {
  if (o.file.empty()) throw ParseError("an instance file is required", 1, 1);
  return realize(load_instance_spec(o.file));
}

Outcome cmd_smooth(const Options& o) {
  const Instance inst = load(o);
  const SmoothVerdict v = smoothness_test(inst.algebra);
  Json j{{"command", "smooth"}, {"instance", inst.name}, {"algebra", json_of(inst.algebra)},
         {"smooth", v.smooth}, {"reason", to_string(v.reason)}};
  bool ok = true;
  if (v.certificate) {
    const bool verified = verify_certificate(*v.certificate, inst.algebra.phi());
    ok = verified;
    j["certificate"] = {{"alpha", to_string(v.certificate->alpha)},
                        {"beta1", to_string(v.certificate->beta1)},
                        {"beta2", to_string(v.certificate->beta2)},
                        {"anchor", "αφ + β₁φ₁ + β₂φ₂ = 1"},
                        {"verified", verified}};
  }
  if (v.common_zero) j["common_zero"] = {str(v.common_zero->first), str(v.common_zero->second)};
  return with_code(j, ok);
}

Outcome cmd_nakayama(const Options& o) {
  const Instance inst = load(o);
  const SmoothVerdict v = smoothness_test(inst.algebra);
  if (!v.smooth) throw Inapplicable("the Nakayama automorphism is defined for smooth instances only");
  const NakayamaImages n = nakayama_images(inst.algebra);
  Json j{{"command", "nakayama"}, {"instance", inst.name}, {"jacobian", str(inst.algebra.jacobian())},
         {"nu", {{"anchor", "ν(x)=Jx, ν(y)=J⁻¹y, ν|_B=id"}, {"x", to_string(n.x)}, {"y", to_string(n.y)},
                 {"z1", to_string(n.z1)}, {"z2", to_string(n.z2)}}},
         {"calabi_yau", inst.algebra.jacobian() == 1}};
  return with_code(j, true);
}

Outcome cmd_analyze(const Options& o) {
  const Instance inst = load(o);
  const AnalysisReport a = analyze(inst.algebra, inst.lambda);
  Json j{{"command", "analyze"}, {"instance", inst.name}, {"algebra", json_of(inst.algebra)}};
  j["report"] = json_of(a);
  const bool ok = !a.witness || a.witness->pass();
  return with_code(j, ok);
}

Outcome cmd_suite(const std::string& name, const SuiteReport& s) {
  Json j{{"command", name}};
  j.update(json_of(s));
  return {s.pass() ? 0 : 1, j};
}

Outcome cmd_verify_htpy(const Options& o) {
  if (o.depth < 4) throw ParseError("--depth must be at least 4", 1, 1);
  if (o.file.empty()) return cmd_suite("verify-htpy", homotopy_suite(suite_options(o)));
  const Instance inst = load(o);
  if (!inst.algebra.phi_regular()) throw Inapplicable("phi = 0: the double complex needs a regular phi");
  const Report r = homotopy_checks(inst.algebra, o.depth);
  Json j{{"command", "verify-htpy"}, {"instance", inst.name}, {"depth", o.depth}, {"checks", json_of(r)}};
  return with_code(j, r.all_pass());
}

Outcome cmd_roundtrip(const Options& o) {
  if (o.file.empty()) return cmd_suite("roundtrip", roundtrip_suite(suite_options(o)));
  const Instance inst = load(o);
  if (!smoothness_test(inst.algebra).smooth) throw Inapplicable("round trip needs a smooth instance");
  Json j{{"instance", inst.name}};
  Outcome out = cmd_suite("roundtrip", roundtrip_suite(suite_options(o), {inst.algebra}));
  j.update(out.report);
  return {out.code, j};
}

Outcome cmd_nakayama_verify(const Options& o) {
  if (o.file.empty()) return cmd_suite("nakayama-verify", nakayama_suite(suite_options(o)));
  const Instance inst = load(o);
  Json j{{"instance", inst.name}};
  Outcome out = cmd_suite("nakayama-verify", nakayama_suite(suite_options(o), inst.algebra));
  j.update(out.report);
  return {out.code, j};
}

Outcome cmd_tor_witness(const Options& o) {
  const Instance inst = load(o);
  const AnalysisReport a = analyze(inst.algebra, inst.lambda);
  if (a.verdict.smooth) throw Inapplicable("instance is smooth; there is no Tor witness");
  Json j{{"command", "tor-witness"}, {"instance", inst.name}, {"algebra", json_of(inst.algebra)}};
  j["report"] = json_of(a);
  if (!a.phi_regular) return with_code(j, a.infinite_global_dimension);
  if (!a.witness) throw Inapplicable("criterion says NOT_SMOOTH; witness unavailable over Q");
  j["conclusion"] = a.witness->pass() ? "Tor_4(M,N) != 0: infinite global dimension" : "witness chain failed";
  return with_code(j, a.witness->pass());
}

Outcome cmd_catalog(const Options& o) {
  const std::string dir = o.catalog_dir.empty() ? default_catalog_dir() : o.catalog_dir;
  const std::vector<InstanceSpec> catalog = load_catalog(dir);
  if (o.catalog_action == "list") {
    Json entries = Json::array();
    for (const auto& e : catalog) {
      Json specs = Json::array();
      for (const auto& s : e.specializations) specs.push_back(s.text);
      entries.push_back({{"name", e.name}, {"status", e.status}, {"description", e.description},
                         {"specializations", specs}});
    }
    return with_code(Json{{"command", "catalog list"}, {"entries", entries}}, true);
  }
  if (o.entry.empty()) throw ParseError("catalog run needs an entry name", 1, 1);
  std::vector<Bindings> specs;
  for (const auto& s : o.specs) specs.push_back(parse_bindings({s, {1, 1}}));
  Json runs = Json::array();
  bool ok = true;
  for (const CatalogRun& run : run_catalog(catalog, o.entry, specs)) {
    Json b = Json::object();
    for (const auto& [k, v] : run.bindings) b[k] = str(v);
    Json rels = Json::array();
    for (const auto& rel : run.validation.relations) {
      rels.push_back({{"relation", rel.relation}, {"residual", rel.residual}, {"pass", rel.pass}});
    }
    ok = ok && run.validation.pass() && (!run.report.witness || run.report.witness->pass());
    runs.push_back({{"bindings", b},
                    {"validation", {{"pass", run.validation.pass()}, {"relations", rels}}},
                    {"report", json_of(run.report)}});
  }
  return with_code(Json{{"command", "catalog run"}, {"entry", o.entry}, {"runs", runs}}, ok);
}

Outcome dispatch(const Options& o) {
  if (o.command == "smooth") return cmd_smooth(o);
  if (o.command == "nakayama") return cmd_nakayama(o);
  if (o.command == "analyze") return cmd_analyze(o);
  if (o.command == "verify-htpy") return cmd_verify_htpy(o);
  if (o.command == "roundtrip") return cmd_roundtrip(o);
  if (o.command == "nakayama-verify") return cmd_nakayama_verify(o);
  if (o.command == "tor-witness") return cmd_tor_witness(o);
  if (o.command == "catalog") return cmd_catalog(o);
  if (o.command == "calculus") return cmd_suite("calculus", calculus_suite(suite_options(o)));
  if (o.command == "smoothness") return cmd_suite("smoothness", smoothness_suite(suite_options(o)));
  if (o.command == "witness") return cmd_suite("witness", witness_suite(suite_options(o)));
  throw ParseError("unknown command '" + o.command + "'", 1, 1);
}

std::uint64_t env_seed() {
  const char* s = std::getenv("GWA_LAB_SEED");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  return *end == '\0' ? v : 0;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Options o;
  o.seed = env_seed();
  CLI::App app{"Exact computations for degree-one generalized Weyl algebras over Q[z1,z2]", "gwalab"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Seed for randomized suites (default: GWA_LAB_SEED or 0)");
  app.add_option("--trials", o.trials, "Number of random trials (0: suite default)");
  app.add_option("--max-degree", o.max_degree, "Degree bound for sampled polynomials (0: suite default)");
  app.add_option("--depth", o.depth, "Depth P of the double complex");
  app.add_flag("--json", o.json, "Emit a JSON report");
  app.add_option("--catalog-dir", o.catalog_dir, "Catalog directory");
  app.fallthrough();

  const std::vector<std::pair<std::string, std::string>> with_file = {
      {"smooth", "Decide homological smoothness and print the certificate"},
      {"nakayama", "Print the Nakayama automorphism"},
      {"analyze", "Full analysis report"},
      {"tor-witness", "Tor_4 witness over a common zero of phi, phi_1, phi_2"}};
  for (const auto& [name, help] : with_file) {
    app.add_subcommand(name, help)->add_option("file", o.file, "Instance file")->required();
  }
  const std::vector<std::pair<std::string, std::string>> optional_file = {
      {"verify-htpy", "Homotopy double complex identities (random instances without a file)"},
      {"roundtrip", "Coboundary round trip (built-in smooth instances without a file)"},
      {"nakayama-verify", "Nakayama multiplicativity and Phi-compatibility"}};
  for (const auto& [name, help] : optional_file) {
    app.add_subcommand(name, help)->add_option("file", o.file, "Instance file");
  }
  app.add_subcommand("calculus", "Noncommutative calculus identities on random samples");
  app.add_subcommand("smoothness", "Smoothness verdicts on the fixture set under random sigma");
  app.add_subcommand("witness", "Tor witness chain on the singular fixtures");
  CLI::App* cat = app.add_subcommand("catalog", "Catalog of examples");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List catalog entries");
  CLI::App* run = cat->add_subcommand("run", "Validate and analyze an entry");
  run->add_option("name", o.entry, "Entry name")->required();
  run->add_option("--spec", o.specs, "Parameter binding such as 'p=1, q=2' (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {2, std::string("usage error: ") + e.what() + "\n"};
  }
  o.command = app.get_subcommands().front()->get_name();
  if (o.command == "catalog") o.catalog_action = cat->get_subcommands().front()->get_name();

  try {
    Outcome r = dispatch(o);
    return {r.code, render(r.report, o.json)};
  } catch (const ParseError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const UnboundParameter& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const UnknownEntry& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const Inapplicable& e) {
    Json j{{"command", o.command}, {"applicable", false}, {"reason", e.what()}};
    return {3, render(j, o.json)};
  } catch (const RelationFails& e) {
    Json j{{"command", o.command}, {"pass", false}, {"failure", e.what()}};
    return {1, render(j, o.json)};
  } catch (const std::exception& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace gwalab
