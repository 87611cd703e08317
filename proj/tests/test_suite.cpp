#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sympspin/errors.hpp"
#include "sympspin/suite.hpp"

using namespace sympspin;

namespace {

json strip_timing(json report) {
  for (auto& c : report.at("checks")) c.erase("elapsed_ms");
  return report;
}

RunConfig quick(std::vector<std::string> suites, int trials = 2) {
  RunConfig c;
  c.suites = std::move(suites);
  c.trials = trials;
  c.max_degree = 4;
  return c;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("default configuration runs every suite and passes") {
    RunConfig c;
    c.trials = 2;
    const SuiteReport rep = run_suite(c);
    CHECK(rep.checks.size() >= 9);
    CHECK(rep.overall_pass());
    for (const auto& check : rep.checks) {
      CAPTURE(check.name);
      CHECK(check.status == CheckStatus::Pass);
      CHECK(!check.paper_anchor.empty());
      CHECK_FALSE(check.counterexample.has_value());
    }
    const json j = report_to_json(rep);
    for (const char* key : {"config", "checks", "overall", "literal_formulas", "witnesses"}) CHECK(j.contains(key));
    CHECK(j.at("overall") == "pass");
    for (const auto& c2 : j.at("checks")) {
      for (const char* key : {"name", "paper_anchor", "status", "trials_run", "elapsed_ms", "counterexample"})
        CHECK(c2.contains(key));
    }
  }

  TEST_CASE("suite filtering and expansion") {
    CHECK(expand_suites({"all"}) == known_suites());
    CHECK(expand_suites({"lemma4", "lemma1", "lemma4"}) == std::vector<std::string>{"lemma1", "lemma4"});
    const SuiteReport rep = run_suite(quick({"lemma7"}));
    REQUIRE(rep.checks.size() == 2);
    CHECK(rep.checks[0].name == "lemma7.weyl_trace_free");
    CHECK(rep.checks[1].name == "lemma7.sigma_tilde_inverse");
  }

  TEST_CASE("same seed, same report apart from timing") {
    const RunConfig c = quick({"lemma3", "theorem9", "symbol-complex"});
    const json a = strip_timing(report_to_json(run_suite(c)));
    const json b = strip_timing(report_to_json(run_suite(c)));
    CHECK(a == b);
  }

  TEST_CASE("reports round-trip through JSON") {
    const SuiteReport rep = run_suite(quick({"lemma6", "corollary11"}));
    const json j = report_to_json(rep);
    CHECK(report_from_json(j) == rep);
    CHECK(report_from_json(json::parse(emit_report(rep, "json"))) == rep);

    json tampered = j;
    tampered["overall"] = "fail";
    CHECK_THROWS_AS(report_from_json(tampered), ParseError);
    CHECK_THROWS_AS(report_from_json(json::array()), ParseError);
  }

  TEST_CASE("counterexamples survive serialization and replay") {
    SuiteReport rep = run_suite(quick({"theorem9"}, 1));
    REQUIRE(rep.checks.size() == 1);
    // Hand-made failing record around the zero tensor, to exercise the round trip.
    const json inputs = json::parse(R"({"tensor": {"l": 2, "entries": []}, "phi": {"l": 2, "cap": 4, "terms": []}})");
    rep.checks[0].status = CheckStatus::Fail;
    rep.checks[0].counterexample = json{{"check", "theorem9.p22_vanishes"}, {"inputs", inputs}};
    const SuiteReport back = report_from_json(report_to_json(rep));
    CHECK(back == rep);
    CHECK_FALSE(back.overall_pass());
    const auto outcomes = replay(report_to_json(back));
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].check == "theorem9.p22_vanishes");
    CHECK(outcomes[0].result.passed);  // the zero tensor trivially satisfies the identity
    CHECK(replay(*rep.checks[0].counterexample).size() == 1);
    CHECK_THROWS_AS(replay(json("text")), ParseError);
  }

  TEST_CASE("text format has one line per check") {
    const SuiteReport rep = run_suite(quick({"lemma1", "lemma4"}));
    const std::string text = emit_report(rep, "text");
    std::istringstream in(text);
    std::string line;
    int check_lines = 0;
    while (std::getline(in, line)) {
      if (line.rfind("lemma", 0) == 0) {
        ++check_lines;
        CHECK(line.size() >= 4);
        CHECK(line.substr(line.size() - 4) == "PASS");
      }
    }
    CHECK(check_lines == 2);
    CHECK(text.find("overall: pass") != std::string::npos);
    CHECK_THROWS_AS(emit_report(rep, "yaml"), InvalidArgument);
  }

  TEST_CASE("validation") {
    RunConfig c;
    CHECK_NOTHROW(validate(c));
    c.l = 5;
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    c = RunConfig{};
    c.l = 1;
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    c.suites = {"lemma1", "lemma6", "lemma7", "fedosov"};
    CHECK_NOTHROW(validate(c));
    c = RunConfig{};
    c.pad = 5;
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    c.suites = {"lemma4"};
    CHECK_NOTHROW(validate(c));
    c = RunConfig{};
    c.suites = {"lemma2"};
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    c = RunConfig{};
    c.trials = -1;
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    c = RunConfig{};
    c.format = "xml";
    CHECK_THROWS_AS(validate(c), InvalidArgument);
  }

  TEST_CASE("no suites: valid JSON, empty checks, not a pass") {
    const SuiteReport rep = run_suite(quick({}));
    CHECK(rep.checks.empty());
    CHECK_FALSE(rep.overall_pass());
    const json j = json::parse(emit_report(rep, "json"));
    CHECK(j.at("checks").empty());
    CHECK(j.at("overall") == "fail");
  }

  TEST_CASE("zero trials are skipped, not passed") {
    const SuiteReport rep = run_suite(quick({"lemma1"}, 0));
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].status == CheckStatus::Skipped);
    CHECK_FALSE(rep.overall_pass());
  }

  TEST_CASE("the CLI honours SYMPSPIN_SEED and writes --out") {
    const auto dir = std::filesystem::temp_directory_path() / "sympspin_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.json", b = dir / "b.json";
    const std::string base = std::string(SYMPSPIN_CLI_PATH) + " --suite lemma1 --trials 2 --seed 1 --out ";
    REQUIRE(std::system(("SYMPSPIN_SEED=77 " + base + a.string()).c_str()) == 0);
    REQUIRE(std::system((base + b.string()).c_str()) == 0);
    const json ja = json::parse(read_file(a)), jb = json::parse(read_file(b));
    CHECK(ja.at("config").at("seed") == 77);
    CHECK(jb.at("config").at("seed") == 1);
    CHECK(ja.at("overall") == "pass");

    // Replaying a passing report exits 0.
    CHECK(std::system((std::string(SYMPSPIN_CLI_PATH) + " --replay " + a.string() + " > /dev/null").c_str()) == 0);
    std::filesystem::remove_all(dir);
  }
}
