#include "sympspin/suite.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <sstream>

#include "sympspin/errors.hpp"

namespace sympspin {

namespace {

bool needs_forms(const std::string& suite) {
  return suite != "lemma1" && suite != "lemma6" && suite != "lemma7" && suite != "fedosov";
}

bool is_theorem_suite(const std::string& suite) {
  return suite == "theorem9" || suite == "theorem10" || suite == "corollary11" || suite == "symbol-complex";
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("report is missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites{"lemma1",   "lemma3",    "lemma4",      "lemma5",
                                               "lemma6",   "lemma7",    "theorem9",    "theorem10",
                                               "corollary11", "symbol-complex", "fedosov"};
  return suites;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& suites) {
  std::vector<std::string> out;
  const bool all = std::find(suites.begin(), suites.end(), "all") != suites.end();
  for (const auto& name : known_suites()) {
    if (all || std::find(suites.begin(), suites.end(), name) != suites.end()) out.push_back(name);
  }
  return out;
}

void validate(const RunConfig& config) {
  for (const auto& s : config.suites) {
    if (s != "all" && std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end()) {
      throw InvalidArgument("unknown suite \"" + s + "\"");
    }
  }
  if (config.format != "json" && config.format != "text") {
    throw InvalidArgument("format must be json or text, got \"" + config.format + "\"");
  }
  if (config.l < 1 || config.l > 4) throw InvalidArgument("l must lie in [1, 4]");
  if (config.max_degree < 0) throw InvalidArgument("max-degree must be >= 0");
  if (config.pad < 0) throw InvalidArgument("pad must be >= 0");
  if (config.trials < 0) throw InvalidArgument("trials must be >= 0");
  if (config.max_degree + config.pad > 255) throw InvalidArgument("max-degree + pad must not exceed 255");
  for (const auto& suite : expand_suites(config.suites)) {
    if (config.l < 2 && needs_forms(suite)) throw InvalidArgument("suite " + suite + " needs l >= 2");
    if (is_theorem_suite(suite) && config.pad < 6) throw InvalidArgument("suite " + suite + " needs pad >= 6");
    for (const auto& spec : check_registry()) {
      if (spec.suite == suite && config.pad < spec.headroom) {
        throw InvalidArgument("check " + spec.id + " needs pad >= " + std::to_string(spec.headroom));
      }
    }
  }
}

bool SuiteReport::overall_pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Pass; });
}

SuiteReport run_suite(const RunConfig& config) {
  validate(config);
  const auto selected = expand_suites(config.suites);
  const TrialParams params{config.l, config.max_degree, config.max_degree + config.pad};

  std::vector<const CheckSpec*> specs;
  for (const auto& spec : check_registry()) {
    if (std::find(selected.begin(), selected.end(), spec.suite) != selected.end()) specs.push_back(&spec);
  }
  std::vector<std::future<ActionReport>> running;
  for (const CheckSpec* spec : specs) {
    running.push_back(std::async(std::launch::async, [spec, &params, &config] {
      return run_check(*spec, params, config.trials, config.seed);
    }));
  }

  SuiteReport report;
  report.config = config;
  for (auto& f : running) {
    ActionReport rep = f.get();
    report.checks.push_back(
        {rep.id, rep.paper_anchor, rep.status, rep.trials_run, rep.elapsed_ms, rep.counterexample});
    for (auto& lit : rep.literals) report.literal_formulas.push_back({rep.id, std::move(lit)});
    if (rep.witness) report.witnesses[rep.id] = *rep.witness;
  }
  return report;
}

json report_to_json(const SuiteReport& report) {
  const RunConfig& c = report.config;
  json config{{"l", c.l},         {"max_degree", c.max_degree}, {"pad", c.pad},       {"trials", c.trials},
              {"seed", c.seed},   {"suites", c.suites},         {"out", c.out},       {"format", c.format}};
  json checks = json::array();
  for (const auto& r : report.checks) {
    checks.push_back({{"name", r.name},
                      {"paper_anchor", r.paper_anchor},
                      {"status", status_name(r.status)},
                      {"trials_run", r.trials_run},
                      {"elapsed_ms", r.elapsed_ms},
                      {"counterexample", r.counterexample ? *r.counterexample : json(nullptr)}});
  }
  json literals = json::array();
  for (const auto& e : report.literal_formulas) {
    literals.push_back({{"check", e.check},
                        {"display", e.record.display},
                        {"claim", e.record.claim},
                        {"status", e.record.status},
                        {"note", e.record.note}});
  }
  return {{"config", config},
          {"checks", checks},
          {"overall", report.overall_pass() ? "pass" : "fail"},
          {"literal_formulas", literals},
          {"witnesses", report.witnesses}};
}

SuiteReport report_from_json(const json& j) {
  SuiteReport report;
  const json config = get_field<json>(j, "config");
  RunConfig& c = report.config;
  c.l = get_field<int>(config, "l");
  c.max_degree = get_field<int>(config, "max_degree");
  c.pad = get_field<int>(config, "pad");
  c.trials = get_field<int>(config, "trials");
  c.seed = get_field<std::uint64_t>(config, "seed");
  c.suites = get_field<std::vector<std::string>>(config, "suites");
  c.out = get_field<std::string>(config, "out");
  c.format = get_field<std::string>(config, "format");
  for (const auto& r : get_field<json>(j, "checks")) {
    CheckRecord rec;
    rec.name = get_field<std::string>(r, "name");
    rec.paper_anchor = get_field<std::string>(r, "paper_anchor");
    rec.status = parse_status(get_field<std::string>(r, "status"));
    rec.trials_run = get_field<int>(r, "trials_run");
    rec.elapsed_ms = get_field<std::int64_t>(r, "elapsed_ms");
    const json ce = get_field<json>(r, "counterexample");
    if (!ce.is_null()) rec.counterexample = ce;
    report.checks.push_back(std::move(rec));
  }
  if (j.contains("literal_formulas")) {
    for (const auto& e : j.at("literal_formulas")) {
      report.literal_formulas.push_back(
          {get_field<std::string>(e, "check"),
           {get_field<std::string>(e, "display"), get_field<std::string>(e, "claim"),
            get_field<std::string>(e, "status"), get_field<std::string>(e, "note")}});
    }
  }
  if (j.contains("witnesses")) report.witnesses = j.at("witnesses");
  const std::string overall = get_field<std::string>(j, "overall");
  if (overall != (report.overall_pass() ? "pass" : "fail")) throw ParseError("\"overall\" disagrees with the checks");
  return report;
}

std::string emit_report(const SuiteReport& report, const std::string& format) {
  if (format == "json") return report_to_json(report).dump(2) + "\n";
  if (format != "text") throw InvalidArgument("format must be json or text");
  std::ostringstream os;
  char line[256];
  for (const auto& r : report.checks) {
    std::string status(status_name(r.status));
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    std::snprintf(line, sizeof line, "%-32s trials=%-4d %8lldms  %s", r.name.c_str(), r.trials_run,
                  static_cast<long long>(r.elapsed_ms), status.c_str());
    os << line << "\n";
  }
  if (!report.literal_formulas.empty()) {
    os << "\nprinted formulas versus projector oracle:\n";
    for (const auto& e : report.literal_formulas) {
      os << "  " << e.record.display << " [" << e.check << "]: " << e.record.status;
      if (!e.record.note.empty()) os << " (" << e.record.note << ")";
      os << "\n";
    }
  }
  os << "\noverall: " << (report.overall_pass() ? "pass" : "fail") << "\n";
  return os.str();
}

std::vector<ReplayOutcome> replay(const json& document) {
  if (!document.is_object()) throw ParseError("replay input must be a JSON object");
  std::vector<ReplayOutcome> out;
  if (document.contains("checks")) {
    for (const auto& r : document.at("checks")) {
      if (!r.contains("counterexample") || r.at("counterexample").is_null()) continue;
      const json& ce = r.at("counterexample");
      out.push_back({ce.value("check", std::string()), replay_counterexample(ce)});
    }
    return out;
  }
  out.push_back({document.value("check", std::string()), replay_counterexample(document)});
  return out;
}

}  // namespace sympspin
