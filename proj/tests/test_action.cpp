#include <doctest.h>

#include <algorithm>

#include "sympspin/action_verify.hpp"
#include "sympspin/curvature.hpp"
#include "sympspin/errors.hpp"
#include "sympspin/serialize.hpp"

using namespace sympspin;

namespace {

const GaussianRational I = GaussianRational::i();

/// (i/2) sum_{ijkl} T^{ij}_{kl} eps^k ^ eps^l (x) e_i.e_j.phi over all ordered (k, l), with the
/// raised tensor formed entry by entry.
SpinorForm naive_action(const Tensor& r, const PolySpinor& phi) {
  const SymplecticSpace& s = standard_space(phi.l());
  const int n = s.dim();
  SpinorForm out(phi.l(), 2, phi.cap());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::vector<int> word{i, j};
      const PolySpinor product = clifford_word(word, phi);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          Rational t;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t += s.omega_upper(i, a) * s.omega_upper(j, b) * r({a, b, k, l});
          if (!is_zero(t)) out.add_wedge_pair(k, l, product, GaussianRational(Rational(0), t / 2));
        }
    }
  return out;
}

const LiteralRecord* literal(const ActionReport& rep, std::string_view name) {
  auto it = std::find_if(rep.literals.begin(), rep.literals.end(), [&](const auto& r) { return r.display == name; });
  return it == rep.literals.end() ? nullptr : &*it;
}

PolySpinor sample_phi(int l, std::uint64_t seed, int degree = 3, int cap = 9) {
  SplitMix64 rng(seed);
  return random_spinor(l, degree, cap, rng);
}

}  // namespace

TEST_SUITE("action-verify") {
  TEST_CASE("curvature action: zero tensor, linearity and the naive expansion") {
    const int l = 2;
    const PolySpinor phi = sample_phi(l, 1);
    CHECK(spinor_curvature_action(Tensor::covariant(4, 4), phi).is_zero());
    const CurvatureTensor a = random_curvature(l, 3), b = random_curvature(l, 4);
    CHECK(spinor_curvature_action((a + b).tensor(), phi) ==
          spinor_curvature_action(a.tensor(), phi) + spinor_curvature_action(b.tensor(), phi));
    CHECK(spinor_curvature_action(a.tensor(), phi) == naive_action(a.tensor(), phi));
    const PolySpinor unit = PolySpinor::constant(l, 4, 1);
    CHECK(spinor_curvature_action(a.tensor(), unit) == naive_action(a.tensor(), unit));

    Tensor bad = Tensor::covariant(4, 4);
    bad({0, 1, 2, 3}) = 1;
    CHECK_THROWS_AS(spinor_curvature_action(bad, phi), SymmetryViolation);
  }

  TEST_CASE("single-instance entry points pass on valid inputs") {
    for (int l : {2, 3}) {
      const PolySpinor phi = sample_phi(l, 10 + static_cast<std::uint64_t>(l), 3, 9);
      CHECK(verify_theorem9(random_ricci(l, 5), phi).status == CheckStatus::Pass);
      CHECK(verify_theorem10(random_weyl(l, 6), phi).status == CheckStatus::Pass);
      CHECK(verify_corollary11(random_curvature(l, 7), phi).status == CheckStatus::Pass);
    }
  }

  TEST_CASE("negative controls: swapped inputs fail and replay as failures") {
    const int l = 2;
    const PolySpinor phi = sample_phi(l, 2);
    const json weyl_in{{"tensor", rank4_to_json(random_weyl(l, 1).tensor())}, {"phi", to_json(phi)}};
    const json ricci_in{{"tensor", rank4_to_json(sigma_tilde_of(random_ricci(l, 1)).tensor())}, {"phi", to_json(phi)}};

    const InstanceResult t9 = find_check("theorem9.p22_vanishes")->evaluate(weyl_in);
    CHECK_FALSE(t9.passed);
    const InstanceResult t10 = find_check("theorem10.p20_vanishes")->evaluate(ricci_in);
    CHECK_FALSE(t10.passed);
    CHECK_FALSE(find_check("theorem10.y2_vanishes")->evaluate(ricci_in).passed);

    CHECK_FALSE(replay_counterexample(json{{"check", "theorem9.p22_vanishes"}, {"inputs", weyl_in}}).passed);
    CHECK_FALSE(replay_counterexample(json{{"check", "theorem10.p20_vanishes"}, {"inputs", ricci_in}}).passed);
    CHECK(replay_counterexample(json{{"check", "theorem9.p22_vanishes"}, {"inputs", ricci_in}}).passed);
    CHECK_THROWS_AS(replay_counterexample(json{{"check", "nope"}, {"inputs", json::object()}}), InvalidArgument);
    CHECK_THROWS_AS(replay_counterexample(json::array()), ParseError);
  }

  TEST_CASE("failures carry a replayable counterexample") {
    // A broken spec: every trial fails, so the first sample becomes the counterexample.
    CheckSpec broken = *find_check("lemma1.clifford_commutator");
    broken.evaluate = [](const json&) { return InstanceResult{false, "forced", {}}; };
    const ActionReport rep = run_check(broken, TrialParams{2, 4, 10}, 3, 42);
    CHECK(rep.status == CheckStatus::Fail);
    CHECK(rep.trials_run == 1);
    REQUIRE(rep.counterexample);
    CHECK(rep.counterexample->at("check") == "lemma1.clifford_commutator");
    // The real check passes on the same inputs.
    CHECK(replay_counterexample(*rep.counterexample).passed);
  }

  TEST_CASE("symbol complex: vanishing part and p11 witness") {
    const ActionReport rep = verify_symbol_complex(2, 10, 42);
    CHECK(rep.status == CheckStatus::Pass);
    CHECK(rep.witness.has_value());
    CHECK_THROWS_AS(verify_symbol_complex(1, 1, 1), InvalidArgument);
  }

  TEST_CASE("lemma suites: skipped on zero trials, deterministic otherwise") {
    for (const auto& r : lemma_suites(2, 4, 0, 1)) CHECK(r.status == CheckStatus::Skipped);
    const auto a = lemma_suites(2, 4, 2, 9), b = lemma_suites(2, 4, 2, 9);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == 7);
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].id == b[k].id);
      CHECK(a[k].status == CheckStatus::Pass);
      CHECK(a[k].trials_run == b[k].trials_run);
    }
    CHECK_THROWS_AS(lemma_suites(1, 4, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(lemma_suites(2, 3, 1, 1), InvalidArgument);
  }

  TEST_CASE("printed right-hand sides are compared, never enforced") {
    const int l = 2;
    const PolySpinor phi = sample_phi(l, 30);
    const ActionReport t9 = verify_theorem9(random_ricci(l, 8), phi);
    CHECK(t9.status == CheckStatus::Pass);
    const LiteralRecord* p20 = literal(t9, "ricci_p20");
    const LiteralRecord* p21 = literal(t9, "ricci_p21");
    REQUIRE(p20);
    REQUIRE(p21);
    // The printed coefficients miss the 1/(2(l+1)) normalisation of sigma~.
    CHECK(p20->status == "mismatch");
    CHECK(p21->status == "mismatch");
    CHECK(t9.literal_match == "fail");

    const ActionReport t10 = verify_theorem10(random_weyl(l, 8), phi);
    CHECK(t10.status == CheckStatus::Pass);
    REQUIRE(literal(t10, "weyl_p21"));
    CHECK(literal(t10, "weyl_p21")->status == "mismatch");
    REQUIRE(literal(t10, "weyl_p22"));
    CHECK(literal(t10, "weyl_p22")->status == "not-testable");

    const ActionReport c11 = verify_corollary11(random_curvature(l, 8), phi);
    CHECK(c11.status == CheckStatus::Pass);
    for (const char* name : {"curvature_p20", "curvature_p21", "curvature_p22"}) {
      CAPTURE(name);
      REQUIRE(literal(c11, name));
      CHECK(!literal(c11, name)->note.empty());
    }
  }

  TEST_CASE("status names round-trip") {
    for (CheckStatus s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped})
      CHECK(parse_status(status_name(s)) == s);
    CHECK_THROWS_AS(parse_status("maybe"), ParseError);
  }
}
