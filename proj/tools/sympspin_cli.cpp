// sympspin: runs the identity suites and reports pass/fail.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sympspin/errors.hpp"
#include "sympspin/suite.hpp"

namespace {

int run_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  sympspin::json doc;
  try {
    doc = sympspin::json::parse(in);
  } catch (const sympspin::json::parse_error& e) {
    std::cerr << "error: " << path << " is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  const auto outcomes = sympspin::replay(doc);
  if (outcomes.empty()) {
    std::cout << "no counterexamples to replay\n";
    return 0;
  }
  bool all_pass = true;
  for (const auto& o : outcomes) {
    std::cout << o.check << ": " << (o.result.passed ? "pass" : "fail");
    if (!o.result.detail.empty()) std::cout << " (" << o.result.detail << ")";
    std::cout << "\n";
    all_pass = all_pass && o.result.passed;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  sympspin::RunConfig config;
  std::string replay_path;

  CLI::App app{"Exact verification of symplectic spinor and curvature identities"};
  app.add_option("--l", config.l, "Half-dimension l of the symplectic space")->capture_default_str();
  app.add_option("--max-degree", config.max_degree, "Maximum degree of random spinors")->capture_default_str();
  app.add_option("--pad", config.pad, "Degree headroom allocated above max-degree")->capture_default_str();
  app.add_option("--trials", config.trials, "Random trials per check")->capture_default_str();
  app.add_option("--seed", config.seed, "Base seed; SYMPSPIN_SEED overrides it")->capture_default_str();
  app.add_option("--suite", config.suites, "Suite to run (repeatable): " + [] {
    std::string names;
    for (const auto& s : sympspin::known_suites()) names += s + ", ";
    return names + "all";
  }())->capture_default_str();
  app.add_option("--out", config.out, "Write the report here instead of stdout");
  app.add_option("--format", config.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--replay", replay_path, "Re-evaluate the counterexample(s) stored in a JSON file")
      ->check(CLI::ExistingFile);
  CLI11_PARSE(app, argc, argv);

  try {
    if (!replay_path.empty()) return run_replay(replay_path);

    if (const char* env = std::getenv("SYMPSPIN_SEED")) {
      std::istringstream is(env);
      std::uint64_t seed = 0;
      if (!(is >> seed) || !is.eof()) {
        std::cerr << "error: SYMPSPIN_SEED must be a non-negative integer\n";
        return 2;
      }
      config.seed = seed;
    }

    const sympspin::SuiteReport report = sympspin::run_suite(config);
    const std::string text = sympspin::emit_report(report, config.format);
    if (config.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(config.out);
      if (!(out << text)) {
        std::cerr << "error: cannot write " << config.out << "\n";
        return 2;
      }
    }
    return report.overall_pass() ? 0 : 1;
  } catch (const sympspin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
