#include <doctest.h>

#include "sympspin/errors.hpp"
#include "sympspin/sampling.hpp"
#include "sympspin/symplectic.hpp"

using namespace sympspin;

namespace {

Tensor random_tensor(int dim, std::vector<Variance> slots, std::uint64_t seed) {
  Tensor t(dim, std::move(slots));
  const auto v = sample_rational_vector(t.size(), seed, 7);
  for (std::size_t k = 0; k < t.size(); ++k) t.flat(k) = v[k].re();
  return t;
}

}  // namespace

TEST_SUITE("symplectic-core") {
  TEST_CASE("standard form for l = 1 and l = 2") {
    const SymplecticSpace s1 = standard_symplectic_form(1);
    CHECK(s1.omega_lower(0, 1) == 1);
    CHECK(s1.omega_lower(1, 0) == -1);
    CHECK(s1.omega_lower(0, 0) == 0);
    CHECK(s1.omega_lower(1, 1) == 0);

    const SymplecticSpace s2 = standard_symplectic_form(2);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        // 1-based: omega_13 = omega_24 = 1, omega_31 = omega_42 = -1.
        Rational expected = 0;
        if ((i == 0 && j == 2) || (i == 1 && j == 3)) expected = 1;
        if ((i == 2 && j == 0) || (i == 3 && j == 1)) expected = -1;
        CHECK(s2.omega_lower(i, j) == expected);
      }
    CHECK_THROWS_AS(standard_symplectic_form(0), InvalidArgument);
  }

  TEST_CASE("antisymmetry and the defining relation of the inverse") {
    for (int l = 1; l <= 4; ++l) {
      const SymplecticSpace& s = standard_space(l);
      const int n = s.dim();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          CHECK(s.omega_lower(i, j) == -s.omega_lower(j, i));
          CHECK(s.omega_upper(i, j) == -s.omega_upper(j, i));
          Rational sum;
          for (int k = 0; k < n; ++k) sum += s.omega_lower(i, k) * s.omega_upper(j, k);
          CHECK(sum == (i == j ? 1 : 0));
        }
    }
  }

  TEST_CASE("omega_inverse for l = 1 by hand") {
    // omega^{ij} solving omega_ik omega^jk = delta: with omega = [[0,1],[-1,0]] the
    // relation reads omega^{12} = 1, omega^{21} = -1.
    const ExactMatrix up = omega_inverse(standard_symplectic_form(1).omega_lower_matrix());
    CHECK(up(0, 1) == GaussianRational(1));
    CHECK(up(1, 0) == GaussianRational(-1));
    CHECK(up(0, 0).is_zero());
    CHECK(up(1, 1).is_zero());
  }

  TEST_CASE("omega_inverse rejects singular and non-antisymmetric input") {
    CHECK_THROWS_AS(omega_inverse(ExactMatrix(2, 2)), SingularMatrix);
    CHECK_THROWS_AS(omega_inverse(ExactMatrix::identity(2)), InvalidArgument);
  }

  TEST_CASE("raising then lowering a slot is the identity") {
    for (int l = 1; l <= 4; ++l) {
      const SymplecticSpace& s = standard_space(l);
      const int rank = l <= 2 ? 4 : 2;
      Tensor t = random_tensor(2 * l, std::vector<Variance>(static_cast<std::size_t>(rank), Variance::Lower),
                               static_cast<std::uint64_t>(l));
      for (int slot = 0; slot < rank; ++slot) {
        Tensor up = raise_lower_index(t, slot, IndexMove::Raise, s);
        CHECK(up.slots()[static_cast<std::size_t>(slot)] == Variance::Upper);
        CHECK(raise_lower_index(up, slot, IndexMove::Lower, s) == t);
      }
    }
  }

  TEST_CASE("zero tensor stays zero") {
    const SymplecticSpace& s = standard_space(2);
    Tensor z = Tensor::covariant(4, 3);
    CHECK(raise_lower_index(z, 1, IndexMove::Raise, s).is_zero());
  }

  TEST_CASE("lowering slot 1 of the identity K^i_j over l = 1") {
    // K'_{ij} = sum_t K^t_j omega_{ti} = omega_{ji}: the transpose of omega.
    const SymplecticSpace& s = standard_space(1);
    Tensor k(2, {Variance::Upper, Variance::Lower});
    k({0, 0}) = 1;
    k({1, 1}) = 1;
    Tensor lowered = raise_lower_index(k, 0, IndexMove::Lower, s);
    CHECK(lowered({0, 0}) == 0);
    CHECK(lowered({0, 1}) == -1);
    CHECK(lowered({1, 0}) == 1);
    CHECK(lowered({1, 1}) == 0);
  }

  TEST_CASE("raising follows omega^{ic} T_c on a vector") {
    const SymplecticSpace& s = standard_space(2);
    Tensor v = random_tensor(4, {Variance::Lower}, 3);
    Tensor up = raise_lower_index(v, 0, IndexMove::Raise, s);
    for (int i = 0; i < 4; ++i) {
      Rational expected;
      for (int c = 0; c < 4; ++c) expected += s.omega_upper(i, c) * v({c});
      CHECK(up({i}) == expected);
    }
  }

  TEST_CASE("bad slots are rejected") {
    const SymplecticSpace& s = standard_space(1);
    Tensor t = Tensor::covariant(2, 2);
    CHECK_THROWS_AS(raise_lower_index(t, 2, IndexMove::Raise, s), InvalidArgument);
    CHECK_THROWS_AS(raise_lower_index(t, -1, IndexMove::Raise, s), InvalidArgument);
    CHECK_THROWS_AS(raise_lower_index(t, 0, IndexMove::Lower, s), InvalidArgument);
  }
}
