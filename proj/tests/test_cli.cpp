#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "catch_amalgamated.hpp"
#include "gwalab/cli.hpp"
#include "gwalab/pipeline.hpp"

using namespace gwalab;
namespace fs = std::filesystem;

namespace {
std::string entry(const std::string& name) { return default_catalog_dir() + "/" + name + ".gwa"; }

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("gwalab_cli_" + name + ".gwa");
  std::ofstream(p) << text;
  return p.string();
}

nlohmann::json run_json(std::vector<std::string> args, int expected_exit = 0) {
  args.push_back("--json");
  const CommandResult r = run_command(args);
  REQUIRE(r.exit_code == expected_exit);
  return nlohmann::json::parse(r.output);
}
}  // namespace

TEST_CASE("analyze reports smoothness, jacobian and nakayama images") {
  const auto j = run_json({"analyze", entry("affine-twist")});
  CHECK(j["report"]["smooth"] == true);
  CHECK(j["report"]["jacobian"] == "6");
  CHECK(j["report"]["calabi_yau"] == false);
  CHECK(j["report"].contains("nakayama"));
  CHECK(j["pass"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run_command({"smooth", entry("circle")}).exit_code == 0);
  CHECK(run_command({"tor-witness", entry("circle")}).exit_code == 3);
  CHECK(run_command({"tor-witness", entry("cusp")}).exit_code == 0);
  const CommandResult zero = run_command({"tor-witness", entry("zero-phi")});
  CHECK(zero.exit_code == 0);
  CHECK(zero.output.find("infinite_global_dimension: true") != std::string::npos);
  CHECK(run_command({"nakayama", entry("cusp")}).exit_code == 3);
  CHECK(run_command({"catalog", "run", "oq-sl2"}).exit_code == 3);
  CHECK(run_command({"catalog", "run", "missing"}).exit_code == 2);
  CHECK(run_command({"frobnicate"}).exit_code == 2);
  CHECK(run_command({"analyze"}).exit_code == 2);
  CHECK(run_command({"analyze", "/nonexistent/file.gwa"}).exit_code != 0);
  CHECK(run_command({"--trials", "abc", "calculus"}).exit_code == 2);

  const std::string bad = write_temp("bad", "phi = z1\nsigma = elem1(z1)\n");
  const CommandResult r = run_command({"smooth", bad});
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("2:") != std::string::npos);
  const std::string unbound = write_temp("unbound", "phi = z1 + t\n");
  CHECK(run_command({"smooth", unbound}).exit_code == 2);
}

TEST_CASE("homotopy verification on a file") {
  const auto j = run_json({"verify-htpy", entry("circle"), "--depth", "5"});
  CHECK(j["pass"] == true);
  CHECK(run_command({"verify-htpy", entry("zero-phi")}).exit_code == 3);
  CHECK(run_command({"verify-htpy", entry("circle"), "--depth", "3"}).exit_code == 2);
}

TEST_CASE("every check carries its anchor") {
  const auto j = run_json({"--seed", "4", "--trials", "3", "nakayama-verify"});
  REQUIRE(j.contains("checks"));
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("anchor"));
    CHECK_FALSE(c["anchor"].get<std::string>().empty());
    CHECK(c.contains("pass"));
  }
}

TEST_CASE("catalog commands") {
  const auto list = run_json({"catalog", "list"});
  CHECK(list.dump().find("npq") != std::string::npos);
  const auto run = run_json({"catalog", "run", "npq", "--spec", "p=0, q=2"});
  CHECK(run["pass"] == true);
  CHECK(run.dump().find("\"smooth\":false") != std::string::npos);
}

TEST_CASE("the same seed gives byte-identical reports") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--seed", "7", "--trials", "4", "verify-htpy"},
        std::vector<std::string>{"--seed", "7", "calculus", "--json"},
        std::vector<std::string>{"--seed", "7", "--trials", "3", "roundtrip"},
        std::vector<std::string>{"analyze", entry("node"), "--json"}}) {
    const CommandResult a = run_command(args);
    const CommandResult b = run_command(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("the seed environment variable sets the default seed") {
  setenv("GWA_LAB_SEED", "5", 1);
  const CommandResult env = run_command({"--trials", "2", "smoothness", "--json"});
  unsetenv("GWA_LAB_SEED");
  const CommandResult flag = run_command({"--seed", "5", "--trials", "2", "smoothness", "--json"});
  CHECK(env.output == flag.output);
}
