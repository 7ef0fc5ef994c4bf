// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gwalab/cli.hpp"
#include "gwalab/pipeline.hpp"
#include "gwalab/suites.hpp"

using namespace gwalab;

namespace {
struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_seconds;  // 0 means no runtime target
  std::function<Outcome()> run;
};

std::uint64_t g_seed = 1;

std::string tally_summary(const SuiteReport& r) {
  std::size_t checks = 0;
  std::size_t failed = 0;
  for (const auto& t : r.tallies) {
    checks += t.passed + t.failed;
    failed += t.failed;
  }
  std::ostringstream os;
  os << r.trials << " trials, " << r.tallies.size() << " identities, " << checks << " checks, " << failed
     << " failed";
  for (const auto& t : r.tallies) {
    if (!t.pass()) os << "; failing: " << t.name;
  }
  return os.str();
}

Outcome suite_outcome(const SuiteReport& r) { return {r.pass(), tally_summary(r)}; }

Outcome calculus() {
  const SuiteReport r = calculus_suite({g_seed, 50, 4, 5});
  std::size_t literal_failures = 0;
  bool corrected_ok = true;
  bool others_ok = true;
  for (const auto& t : r.tallies) {
    const bool second = t.name.find("(i=2)") != std::string::npos;
    const bool corrected = t.name.find("correction") != std::string::npos;
    if (second && !corrected) {
      literal_failures += t.failed;
    } else if (corrected) {
      corrected_ok = corrected_ok && t.pass();
    } else {
      others_ok = others_ok && t.pass();
    }
  }
  std::ostringstream os;
  os << tally_summary(r) << ". Second-variable delta identities as stated fail in " << literal_failures
     << " checks; with the d z1 correction term they hold " << (corrected_ok ? "in every trial" : "NOT always")
     << "; all other identities " << (others_ok ? "hold" : "FAIL");
  return {r.pass(), os.str()};
}

Outcome witness() {
  const SuiteReport r = witness_suite({g_seed, 0, 0, 5});
  bool concluded = true;
  for (const Poly2& phi : {z1().pow(2), z1() * z2()}) {
    const AnalysisReport a = analyze(GwaAlgebra(AutWord(), phi), std::make_pair(Rational(0), Rational(0)));
    concluded = concluded && a.witness && a.witness->pass() && a.infinite_global_dimension;
  }
  const AnalysisReport zero = analyze(GwaAlgebra(AutWord(), Poly2()));
  const bool short_circuit = !zero.witness && zero.infinite_global_dimension;
  std::ostringstream os;
  os << tally_summary(r) << "; infinite global dimension concluded: " << (concluded ? "yes" : "no")
     << "; phi = 0 short circuit: " << (short_circuit ? "yes" : "no");
  return {r.pass() && concluded && short_circuit, os.str()};
}

Outcome npq() {
  const auto catalog = load_catalog(default_catalog_dir());
  const std::vector<Bindings> specs{{{"p", 1}, {"q", 2}}, {{"p", 1}, {"q", Rational(1, 3)}}, {{"p", 0}, {"q", 2}}};
  const auto runs = run_catalog(catalog, "npq", specs);
  const bool expected[] = {true, true, false};
  bool ok = runs.size() == 3;
  std::ostringstream os;
  for (std::size_t i = 0; i < runs.size() && i < 3; ++i) {
    const bool smooth = runs[i].report.verdict.smooth;
    const bool valid = runs[i].validation.pass();
    ok = ok && smooth == expected[i] && valid;
    os << (i ? "; " : "") << "(p,q)=(" << to_string(runs[i].bindings.at("p")) << ","
       << to_string(runs[i].bindings.at("q")) << "): " << (smooth ? "smooth" : "not smooth") << ", "
       << runs[i].validation.relations.size() << " relations " << (valid ? "valid" : "INVALID");
  }
  return {ok, os.str()};
}

Outcome determinism() {
  const std::string dir = default_catalog_dir();
  const std::string seed = std::to_string(g_seed);
  const std::vector<std::vector<std::string>> commands{
      {"--seed", seed, "calculus", "--json"},
      {"--seed", seed, "--trials", "5", "verify-htpy"},
      {"--seed", seed, "smoothness", "--json"},
      {"--seed", seed, "--trials", "4", "roundtrip", "--json"},
      {"--seed", seed, "--trials", "10", "nakayama-verify"},
      {"--seed", seed, "witness", "--json"},
      {"analyze", dir + "/cusp.gwa", "--json"},
      {"tor-witness", dir + "/node.gwa"},
      {"catalog", "run", "npq", "--json"},
      {"catalog", "list"}};
  std::size_t identical = 0;
  for (const auto& c : commands) {
    const CommandResult a = run_command(c);
    const CommandResult b = run_command(c);
    if (a.exit_code == b.exit_code && a.output == b.output && !a.output.empty()) ++identical;
  }
  return {identical == commands.size(),
          std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical across two runs"};
}
}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_seed = std::strtoull(argv[1], nullptr, 10);

  const std::vector<Criterion> criteria{
      {"calculus identities", 5, calculus},
      {"homotopy double complex", 60, [] { return suite_outcome(homotopy_suite({g_seed, 20, 3, 5})); }},
      {"smoothness criterion", 0, [] { return suite_outcome(smoothness_suite({g_seed, 5, 0, 5})); }},
      {"coboundary round trip", 120, [] { return suite_outcome(roundtrip_suite({g_seed, 20, 0, 5})); }},
      {"nakayama automorphism", 0, [] { return suite_outcome(nakayama_suite({g_seed, 50, 0, 5})); }},
      {"non-smooth witness", 0, witness},
      {"N(p,q) reproduction", 0, npq},
      {"determinism", 0, determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = c.budget_seconds == 0 || secs < c.budget_seconds;
    const bool pass = o.pass && in_budget;
    if (!pass) ++failures;
    std::printf("AC%zu %s: %s (%.2fs%s) %s\n", i + 1, c.name.c_str(), pass ? "PASS" : "FAIL", secs,
                in_budget ? "" : ", over runtime target", o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
