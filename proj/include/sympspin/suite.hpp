#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympspin/action_verify.hpp"

namespace sympspin {

struct RunConfig {
  int l = 2;
  int max_degree = 6;
  int pad = 6;
  int trials = 20;
  std::uint64_t seed = 42;
  /// Any of known_suites(), or "all".
  std::vector<std::string> suites{"all"};
  /// Empty means stdout.
  std::string out;
  std::string format = "json";

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Suite names in execution order (without "all").
const std::vector<std::string>& known_suites();

/// Selected suites in execution order with "all" expanded and duplicates removed.
std::vector<std::string> expand_suites(const std::vector<std::string>& suites);

/// Throws InvalidArgument for unknown suites or formats, l outside [1, 4] (or < 2 with a
/// spinor-form suite), negative counts, or pad below what a selected suite consumes
/// (at least 6 for any theorem suite).
void validate(const RunConfig& config);

struct CheckRecord {
  std::string name;
  std::string paper_anchor;
  CheckStatus status = CheckStatus::Skipped;
  int trials_run = 0;
  std::int64_t elapsed_ms = 0;
  std::optional<json> counterexample;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct LiteralEntry {
  std::string check;
  LiteralRecord record;

  friend bool operator==(const LiteralEntry& a, const LiteralEntry& b) {
    return a.check == b.check && a.record.display == b.record.display && a.record.claim == b.record.claim &&
           a.record.status == b.record.status && a.record.note == b.record.note;
  }
};

struct SuiteReport {
  RunConfig config;
  std::vector<CheckRecord> checks;
  std::vector<LiteralEntry> literal_formulas;
  /// Check name -> inputs of the instance that satisfied an existential check.
  json witnesses = json::object();

  /// Pass iff there is at least one check and every check passed.
  bool overall_pass() const;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// Validates, then runs every check of the selected suites. Checks run concurrently; the
/// report order is the registry order. Output is deterministic apart from elapsed_ms.
SuiteReport run_suite(const RunConfig& config);

json report_to_json(const SuiteReport& report);
/// Throws ParseError on malformed reports.
SuiteReport report_from_json(const json& j);

/// "json" (pretty-printed, trailing newline) or "text" (one line per check).
std::string emit_report(const SuiteReport& report, const std::string& format);

struct ReplayOutcome {
  std::string check;
  InstanceResult result;
};

/// Accepts a single {"check", "inputs"} object or a full report, in which case every
/// non-null counterexample is replayed.
std::vector<ReplayOutcome> replay(const json& document);

}  // namespace sympspin
