#include <doctest.h>

#include <bit>
#include <map>

#include "sympspin/errors.hpp"
#include "sympspin/exact_matrix.hpp"
#include "sympspin/spinor_form.hpp"

using namespace sympspin;

namespace {

const GaussianRational I = GaussianRational::i();

PolySpinor one(int l, int cap) { return PolySpinor::constant(l, cap, 1); }

SpinorForm basis_form(int l, int cap, std::initializer_list<int> tuple, const PolySpinor& s) {
  SpinorForm f(l, static_cast<int>(tuple.size()), cap);
  f.add(form_index(std::vector<int>(tuple), l), s);
  return f;
}

/// omega (x) psi with omega = sum_{i<j} omega_ij epsilon^i ^ epsilon^j.
SpinorForm omega_form(const PolySpinor& psi) {
  const int l = psi.l();
  const SymplecticSpace& s = standard_space(l);
  SpinorForm f(l, 2, psi.cap());
  for (int i = 0; i < 2 * l; ++i)
    for (int j = i + 1; j < 2 * l; ++j)
      if (!is_zero(s.omega_lower(i, j))) f.add_wedge_pair(i, j, psi, GaussianRational(s.omega_lower(i, j)));
  return f;
}

SpinorForm xxyy(const SpinorForm& f) { return op_X(op_X(op_Y(op_Y(f)))); }
SpinorForm xy(const SpinorForm& f) { return op_X(op_Y(f)); }

/// The formulas as printed, before the sign corrections.
SpinorForm printed_p21(const SpinorForm& f) {
  const int l = f.l();
  const GaussianRational a = I * GaussianRational(Rational(1, 1 - l));
  return a * (xy(f) - (I * GaussianRational(Rational(1, l)) * xxyy(f)));
}
SpinorForm printed_p22(const SpinorForm& f) {
  const int l = f.l();
  return f - (I * GaussianRational(Rational(1, 1 - l))) * xy(f) + GaussianRational(Rational(1, 1 - l)) * xxyy(f);
}

/// 2-forms epsilon^mask (x) x^alpha of weight w, where epsilon^i has weight -1 for i < l and
/// +1 otherwise and x^alpha has weight |alpha|. X and Y preserve this grading.
std::vector<SpinorForm> weight_basis(int l, int w, int cap) {
  std::vector<SpinorForm> out;
  for (FormIndex mask = 0; mask < (1u << (2 * l)); ++mask) {
    if (std::popcount(mask) != 2) continue;
    int shift = 0;
    for (int i = 0; i < 2 * l; ++i)
      if ((mask >> i) & 1u) shift += i < l ? -1 : 1;
    if (w - shift < 0) continue;
    for (const auto& m : monomials_of_degree(l, w - shift)) {
      PolySpinor s(l, cap);
      s.add_term(m, 1);
      SpinorForm f(l, 2, cap);
      f.add(mask, s);
      out.push_back(f);
    }
  }
  return out;
}

std::size_t image_rank(Projector p, const std::vector<SpinorForm>& basis) {
  std::vector<SpinorForm> images;
  std::map<std::pair<FormIndex, Monomial>, std::size_t> keys;
  for (const auto& b : basis) {
    images.push_back(project(p, b));
    for (const auto& [mask, s] : images.back().components())
      for (const auto& [m, c] : s.terms()) keys.try_emplace({mask, m}, keys.size());
  }
  if (keys.empty()) return 0;
  ExactMatrix mat(keys.size(), images.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (const auto& [mask, s] : images[k].components())
      for (const auto& [m, c] : s.terms()) mat(keys.at({mask, m}), k) = c;
  return rank(mat);
}

}  // namespace

TEST_SUITE("spinor-forms") {
  TEST_CASE("wedge and contraction examples") {
    const int l = 2, cap = 4;
    const SpinorForm s0 = SpinorForm::scalar(one(l, cap));
    CHECK(wedge(0, s0) == basis_form(l, cap, {0}, one(l, cap)));
    CHECK(wedge(1, wedge(0, s0)) == GaussianRational(-1) * basis_form(l, cap, {0, 1}, one(l, cap)));
    CHECK(wedge(0, wedge(0, s0)).is_zero());
    CHECK(contract(0, basis_form(l, cap, {0, 1}, one(l, cap))) == basis_form(l, cap, {1}, one(l, cap)));
    CHECK(contract(1, basis_form(l, cap, {0, 1}, one(l, cap))) == GaussianRational(-1) * basis_form(l, cap, {0}, one(l, cap)));
    CHECK(contract(0, s0).degree() == -1);
    CHECK(contract(0, s0).is_zero());
    CHECK_THROWS_AS(form_index(std::vector<int>{1, 0}, l), InvalidArgument);
    CHECK_THROWS_AS(form_index(std::vector<int>{0, 4}, l), InvalidArgument);
  }

  TEST_CASE("contraction is an anti-derivation") {
    SplitMix64 rng(4);
    const int l = 2;
    const SpinorForm phi = random_form(l, 1, 2, 4, rng);
    for (int i = 0; i < 2 * l; ++i)
      for (int j = 0; j < 2 * l; ++j) {
        SpinorForm lhs = contract(i, wedge(j, phi));
        SpinorForm rhs = GaussianRational(-1) * wedge(j, contract(i, phi));
        if (i == j) rhs += phi;
        CHECK(lhs == rhs);
      }
  }

  TEST_CASE("X on 0-forms and the relation YX = -i l there") {
    SplitMix64 rng(6);
    for (int l : {2, 3}) {
      const PolySpinor s = random_spinor(l, 3, 6, rng);
      const SpinorForm x = op_X(SpinorForm::scalar(s));
      SpinorForm expected(l, 1, 6);
      for (int i = 0; i < 2 * l; ++i) expected.add(FormIndex{1} << i, clifford_basis(i, s), GaussianRational(-1));
      CHECK(x == expected);
      CHECK(op_X(SpinorForm::scalar(PolySpinor(l, 6))).is_zero());
      CHECK(op_Y(x) == (-I * GaussianRational(l)) * SpinorForm::scalar(s));
    }
  }

  TEST_CASE("H acts as i (r - l) on r-forms") {
    SplitMix64 rng(12);
    for (int l : {2, 3}) {
      for (int r = 0; r <= 2 * l; ++r) {
        const SpinorForm phi = random_form(l, r, 2, 5, rng);
        CHECK(op_H(phi) == (I * GaussianRational(r - l)) * phi);
      }
    }
  }

  TEST_CASE("omega (x) psi lies in the image of p20") {
    SplitMix64 rng(13);
    for (int l : {2, 3}) {
      const PolySpinor psi = random_spinor(l, 2, 6, rng);
      const SpinorForm w = omega_form(psi);
      CHECK(xxyy(w) == GaussianRational(l) * w);
      CHECK(project(Projector::P20, w) == w);
      CHECK(project(Projector::P21, w).is_zero());
      CHECK(project(Projector::P22, w).is_zero());
    }
  }

  TEST_CASE("projectors: idempotent, orthogonal, complete") {
    SplitMix64 rng(21);
    for (int l : {2, 3}) {
      const int cap = l == 2 ? 8 : 7;
      for (int t = 0; t < 2; ++t) {
        const SpinorForm phi = random_form(l, 2, 2, cap, rng);
        const TwoFormParts parts = decompose_two_form(phi);
        CHECK(parts.e20 + parts.e21 + parts.e22 == phi);
        for (Projector p : {Projector::P20, Projector::P21, Projector::P22}) {
          const SpinorForm once = project(p, phi);
          CHECK(project(p, once) == once);
        }
        CHECK(project(Projector::P20, parts.e21).is_zero());
        CHECK(project(Projector::P21, parts.e22).is_zero());
        CHECK(project(Projector::P22, parts.e20).is_zero());

        const SpinorForm psi = random_form(l, 1, 2, cap, rng);
        CHECK(project(Projector::P10, psi) + project(Projector::P11, psi) == psi);
        CHECK(project(Projector::P10, project(Projector::P10, psi)) == project(Projector::P10, psi));
        const SpinorForm image = op_X(SpinorForm::scalar(random_spinor(l, 2, cap, rng)));
        CHECK(project(Projector::P10, image) == image);
      }
    }
    const SpinorForm zero(2, 2, 6);
    const TwoFormParts z = decompose_two_form(zero);
    CHECK(z.e20.is_zero());
    CHECK(z.e21.is_zero());
    CHECK(z.e22.is_zero());
  }

  TEST_CASE("the printed p21 and p22 are not idempotent") {
    SplitMix64 rng(31);
    const SpinorForm phi = random_form(2, 2, 2, 10, rng);
    const SpinorForm a = printed_p21(phi);
    CHECK_FALSE(printed_p21(a) == a);
    const SpinorForm b = printed_p22(phi);
    CHECK_FALSE(printed_p22(b) == b);
    // The printed p21 is the negative of the projector.
    CHECK(a == GaussianRational(-1) * project(Projector::P21, phi));
  }

  TEST_CASE("graded ranks of the projector images at l = 2") {
    // Weight-w part of Lambda^2 V* (x) S; golden ranks frozen from the first exact run.
    struct Row {
      int w;
      std::size_t dim, p20, p21, p22;
    };
    const Row rows[] = {{-2, 1, 0, 0, 1}, {-1, 2, 0, 2, 0}, {0, 7, 1, 3, 3}, {1, 12, 2, 6, 4}, {2, 18, 3, 9, 6}};
    for (const Row& r : rows) {
      CAPTURE(r.w);
      const auto basis = weight_basis(2, r.w, r.w + 8);
      CHECK(basis.size() == r.dim);
      const std::size_t a = image_rank(Projector::P20, basis), b = image_rank(Projector::P21, basis),
                        c = image_rank(Projector::P22, basis);
      CHECK(a == r.p20);
      CHECK(b == r.p21);
      CHECK(c == r.p22);
      CHECK(a + b + c == basis.size());
      // X^2 is injective on 0-forms, so the p20 part of weight w is a copy of degree-w spinors.
      CHECK(a == (r.w >= 0 ? static_cast<std::size_t>(r.w + 1) : 0));
    }
  }

  TEST_CASE("sp(2l) equivariance of X, Y and the projectors") {
    SplitMix64 rng(41);
    const int l = 2;
    for (int t = 0; t < 3; ++t) {
      const SpLieElement a = random_sp_element(l, rng);
      const SpinorForm phi = random_form(l, 2, 2, 10, rng);
      CHECK(sp_action_form(a, op_X(phi)) == op_X(sp_action_form(a, phi)));
      CHECK(sp_action_form(a, op_Y(phi)) == op_Y(sp_action_form(a, phi)));
      for (Projector p : {Projector::P20, Projector::P21, Projector::P22})
        CHECK(sp_action_form(a, project(p, phi)) == project(p, sp_action_form(a, phi)));
    }
  }

  TEST_CASE("dual action: the pairing eta(v) is invariant") {
    // (A.eta)(v) + eta(A v) = 0 for covector eta and vector v.
    SplitMix64 rng(43);
    const int l = 2, n = 4;
    const SymplecticSpace& space = standard_space(l);
    const SpLieElement a = random_sp_element(l, rng);
    const Tensor m = a.endomorphism(space);
    for (int j = 0; j < n; ++j) {
      const SpinorForm eta = basis_form(l, 4, {j}, one(l, 4));
      // Remove the spinor-factor part, leaving the covector action on epsilon^j (x) 1.
      const SpinorForm moved = sp_action_form(a, eta) - basis_form(l, 4, {j}, sp_action(a, one(l, 4)));
      for (int v = 0; v < n; ++v) {
        const GaussianRational acted = moved.component(FormIndex{1} << v).coefficient(Monomial{});
        CHECK(acted + GaussianRational(m({j, v})) == GaussianRational(0));
      }
    }
  }

  TEST_CASE("projector images keep spinor parity") {
    SplitMix64 rng(47);
    const SpinorForm phi = parity_part(random_form(2, 2, 3, 10, rng), 1);
    for (Projector p : {Projector::P20, Projector::P21, Projector::P22}) {
      const SpinorForm img = project(p, phi);
      CHECK(parity_part(img, 0).is_zero());
      CHECK(parity_part(img, 1) == img);
    }
  }

  TEST_CASE("argument errors") {
    SplitMix64 rng(1);
    CHECK_THROWS_AS(project(Projector::P20, SpinorForm(1, 2, 6)), InvalidArgument);
    CHECK_THROWS_AS(project(Projector::P20, random_form(2, 1, 1, 6, rng)), InvalidArgument);
    CHECK_THROWS_AS(project(Projector::P10, random_form(2, 2, 1, 6, rng)), InvalidArgument);
    // XY sends epsilon^3 ^ epsilon^4 (x) (x^1)^3 through degree 4 to degree 5.
    const auto top = [](int cap) { return basis_form(2, cap, {2, 3}, PolySpinor::monomial(2, cap, std::vector<int>{3, 0}, 1)); };
    CHECK_THROWS_AS(project(Projector::P20, top(4)), DegreeOverflow);
    CHECK_NOTHROW(project(Projector::P20, top(5)));
  }
}
