#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sympspin/curvature.hpp"
#include "sympspin/serialize.hpp"
#include "sympspin/spinor_form.hpp"

namespace sympspin {

/// (i/2) sum T^{ij}_{kl} eps^k ^ eps^l (x) e_i.e_j.phi, with T^{ij}_{kl} obtained from the lowered
/// tensor by raising its first two slots. Throws SymmetryViolation unless T satisfies the
/// defining curvature identities. Raises spinor degree by at most two.
SpinorForm spinor_curvature_action(const Tensor& t, const PolySpinor& phi);

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view status_name(CheckStatus s);
CheckStatus parse_status(std::string_view s);

/// Comparison of one printed right-hand side against the projector oracle.
struct LiteralRecord {
  std::string display;  // stable identifier, e.g. "ricci_p20"
  std::string claim;    // the printed formula in index notation
  std::string status;   // "match" | "mismatch" | "not-testable"
  std::string note;     // oracle coefficients or the reason it cannot be tested
};

/// Result of evaluating one check on one set of inputs.
struct InstanceResult {
  bool passed = true;
  std::string detail;
  std::vector<LiteralRecord> literals;
};

struct ActionReport {
  std::string id;
  std::string paper_anchor;
  CheckStatus status = CheckStatus::Skipped;
  int trials_run = 0;
  std::int64_t elapsed_ms = 0;
  /// {"check": id, "inputs": {...}} for the first failing trial.
  std::optional<json> counterexample;
  /// Inputs of the instance that satisfied an existential check.
  std::optional<json> witness;
  /// "pass" | "fail" | "not-applicable", aggregated over `literals`.
  std::string literal_match = "not-applicable";
  std::vector<LiteralRecord> literals;
  std::string detail;
};

struct TrialParams {
  int l = 2;
  int max_degree = 6;
  int cap = 12;
};

/// One named property: how to sample inputs and how to evaluate them.
/// Inputs are JSON so that every failure is replayable from its counterexample alone.
struct CheckSpec {
  std::string id;
  std::string suite;
  std::string paper_anchor;
  /// Spinor degree headroom the evaluation consumes; 0 for tensor-only checks.
  int headroom = 0;
  /// Passes when some trial passes (witness search) rather than when all do.
  bool existential = false;
  std::function<json(SplitMix64&, const TrialParams&)> sample;
  std::function<InstanceResult(const json&)> evaluate;
};

const std::vector<CheckSpec>& check_registry();
/// nullptr when unknown.
const CheckSpec* find_check(std::string_view id);

/// Runs `trials` independent samples. Trial streams derive from (seed, id), so results do not
/// depend on which other checks run. trials = 0 yields Skipped.
ActionReport run_check(const CheckSpec& spec, const TrialParams& params, int trials, std::uint64_t seed);

/// Evaluates a {"check", "inputs"} object; throws InvalidArgument for an unknown check.
InstanceResult replay_counterexample(const json& counterexample);

// Single-instance entry points.
ActionReport verify_theorem9(const RicciTensor& sigma, const PolySpinor& phi);
ActionReport verify_theorem10(const WeylTensor& w, const PolySpinor& phi);
ActionReport verify_corollary11(const CurvatureTensor& r, const PolySpinor& phi);
/// Runs both the vanishing check and the p11 witness search; the witness check is folded into
/// the returned status and recorded in `witness`.
ActionReport verify_symbol_complex(int l, int trials, std::uint64_t seed);

/// Runs the lemma1, lemma3..lemma7 checks with spinor degree <= degree and headroom 6.
std::vector<ActionReport> lemma_suites(int l, int degree, int trials, std::uint64_t seed);

}  // namespace sympspin
