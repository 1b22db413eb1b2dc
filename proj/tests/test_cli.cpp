#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eqc/cli.hpp"

using eqc::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string example_text() { return run({"gen", "example51"}).out; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("levelize the worked example as JSON") {
    const auto r = run({"levelize", "-", "--json"}, example_text());
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["extended_mu"]["X"] == "2/1");
    CHECK(j["extended_mu"]["Y"] == "3/1");
    CHECK(j["extended_mu"]["Z"] == "4/1");
    CHECK(j["levels"][0]["reactions"][0] == "A + B -> X");
  }

  TEST_CASE("output is byte-identical across runs") {
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"levelize", "-", "--json"}, {"hilbert", "-", "--json"}, {"check", "-", "--json"},
             {"bound", "-", "--json"}, {"verify", "-", "--numeric", "--json"},
             {"concentrations", "-", "--json"}, {"oracle", "-", "--json"}}) {
      CHECK(run(cmd, example_text()).out == run(cmd, example_text()).out);
    }
  }

  TEST_CASE("verify passes numerically") {
    const auto r = run({"verify", "-", "--base", "1/100", "--numeric", "--tol", "1e-6"}, example_text());
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
    const auto hp = run({"verify", "-", "--base", "1e-30", "--numeric", "--digits", "60", "--json"},
                        example_text());
    CHECK(hp.code == 0);
    CHECK(nlohmann::json::parse(hp.out)["result"] == "PASS");
  }

  TEST_CASE("translator pipeline") {
    const auto gen = run({"gen", "translator", "--n", "3", "--layers", "2", "--mode", "uniform"});
    REQUIRE(gen.code == 0);
    const auto r = run({"bound", "-", "--tbn", "--json"}, gen.out);
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["mu1"] == "4/3");
  }

  TEST_CASE("with-input translator metadata") {
    const auto r = run({"gen", "translator", "--n", "3", "--mode", "with-input", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "with-input");
    CHECK(j["leak_bound"]["quarter_regime"].is_boolean());
  }

  TEST_CASE("bounds from the command line") {
    const auto basis = run({"bound", "-", "--polymer", "Z", "--method", "basis", "--json"}, example_text());
    REQUIRE(basis.code == 0);
    const auto j = nlohmann::json::parse(basis.out);
    CHECK(j["value"] == "3/1");
    CHECK(j["certified"] == false);
    const auto en = run({"bound", "-", "--polymer", "X", "--method", "enum", "--json"}, example_text());
    CHECK(nlohmann::json::parse(en.out)["value"] == "2/1");
    const auto lvl = run({"bound", "-", "--polymer", "Z", "--level", "3", "--method", "enum", "--json"},
                         example_text());
    CHECK(nlohmann::json::parse(lvl.out)["value"] == "4/1");
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"levelize", "/nonexistent/file"}).code == 2);
    CHECK(run({"levelize", "-"}, "polymer A = q\n").code == 2);
    CHECK(run({"concentrations", "-", "--base", "2"}, example_text()).code == 2);
    CHECK(run({"bound", "-", "--method", "simplex"}, example_text()).code == 2);
    CHECK(run({"--help"}).code == 0);
    // Unproducible off-target polymer.
    CHECK(run({"levelize", "-"}, "monomer a\nmonomer b\npolymer A = a\npolymer B = b\nontarget A mu=1\n").code == 1);
    // Unstable on-target set: A -> 2 Q has ratio 1/2.
    const std::string unstable =
        "monomer a\nmonomer b\npolymer A = a a\npolymer B = b\npolymer P = a b\npolymer Q = a\n"
        "ontarget A mu=1\nontarget B mu=1\n";
    CHECK(run({"levelize", "-"}, unstable).code == 1);
    CHECK(run({"check", "-"}, unstable).code == 0);
    CHECK(run({"hilbert", "-", "--budget", "2"}, example_text()).code == 3);
    setenv("EQC_BASIS_BUDGET", "2", 1);
    CHECK(run({"hilbert", "-"}, example_text()).code == 3);
    unsetenv("EQC_BASIS_BUDGET");
  }

  TEST_CASE("gen writes a sidecar") {
    const std::string path = "cli_gen_test.tbn";
    REQUIRE(run({"gen", "and-gate", "--inputs", "b", "--out", path}).code == 0);
    std::ifstream meta(path + ".json");
    REQUIRE(meta);
    const auto j = nlohmann::json::parse(meta);
    CHECK(j["inputs"] == "b");
    const auto r = run({"bound", path, "--tbn", "--json"});
    CHECK(nlohmann::json::parse(r.out)["mu1"] == "4/3");
    std::remove(path.c_str());
    std::remove((path + ".json").c_str());
  }

  TEST_CASE("oracle") {
    const auto r = run({"oracle", "-", "--max-reactants", "4", "--json"}, example_text());
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["min_ratio"] == "2/1");
  }
}
