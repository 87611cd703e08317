#include <doctest.h>

#include "sympspin/errors.hpp"
#include "sympspin/exact_matrix.hpp"
#include "sympspin/sampling.hpp"

using namespace sympspin;

namespace {

ExactMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<ExactVector> out;
  for (auto r : rows) {
    ExactVector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(v);
  }
  return ExactMatrix::from_rows(out);
}

ExactMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  // Low-rank-prone: many zeros and repeated rows.
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.uniform(0, 2) != 0) m(r, c) = rng.gaussian_rational(3);
  if (rows > 2) {
    for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) + m(1, c);
  }
  return m;
}

bool is_rref(const ExactMatrix& m, const std::vector<std::size_t>& pivots) {
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (k > 0 && pivots[k] <= pivots[k - 1]) return false;
    if (m(k, pivots[k]) != GaussianRational(1)) return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != k && !m(r, pivots[k]).is_zero()) return false;
    for (std::size_t c = 0; c < pivots[k]; ++c)
      if (!m(k, c).is_zero()) return false;
  }
  for (std::size_t r = pivots.size(); r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

}  // namespace

TEST_SUITE("exact-arith") {
  TEST_CASE("gaussian rationals are canonical and close under the field operations") {
    GaussianRational a(Rational(2, 4), Rational(-3, 6));
    CHECK(a.re() == Rational(1, 2));
    CHECK(a.re().get_den() == 2);
    CHECK(a.im().get_num() == -1);
    CHECK(a.to_string() == "1/2-1/2i");
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));

    SplitMix64 rng(7);
    for (int t = 0; t < 50; ++t) {
      GaussianRational x = rng.gaussian_rational(9), y = rng.gaussian_rational(9), z = rng.gaussian_rational(9);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      if (!x.is_zero()) CHECK(x * x.inverse() == GaussianRational(1));
    }
    CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
  }

  TEST_CASE("parse_rational accepts p/q and rejects a zero denominator") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
  }

  TEST_CASE("rref examples") {
    auto id = rref(ExactMatrix::identity(3));
    CHECK(id.reduced == ExactMatrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    auto zero = rref(ExactMatrix(2, 2));
    CHECK(zero.reduced == ExactMatrix(2, 2));
    CHECK(zero.pivots.empty());

    auto r1 = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r1.reduced == mat({{1, 2}, {0, 0}}));
    CHECK(r1.pivots == std::vector<std::size_t>{0});
  }

  TEST_CASE("nullspace examples") {
    CHECK(nullspace_basis(ExactMatrix::identity(2)).empty());
    CHECK(nullspace_basis(ExactMatrix(2, 3)).size() == 3);
    auto ns = nullspace_basis(mat({{1, 1}}));
    REQUIRE(ns.size() == 1);
    // Spans (1, -1): the two entries are negatives of each other and nonzero.
    CHECK(!ns[0][0].is_zero());
    CHECK(ns[0][0] == -ns[0][1]);
  }

  TEST_CASE("solve_linear examples") {
    ExactVector b{GaussianRational(3), GaussianRational(Rational(1, 2), Rational(2))};
    CHECK(*solve_linear(ExactMatrix::identity(2), b) == b);

    auto x = solve_linear(mat({{1, 1}}), {GaussianRational(2)});
    REQUIRE(x);
    CHECK(mat({{1, 1}}).apply(*x) == ExactVector{GaussianRational(2)});

    CHECK_FALSE(solve_linear(mat({{0}}), {GaussianRational(1)}));
    CHECK_THROWS_AS(solve_linear(mat({{1, 1}}), {GaussianRational(1), GaussianRational(1)}), DimensionMismatch);
  }

  TEST_CASE("random matrices: rref form, idempotency, kernel and rank-nullity") {
    SplitMix64 rng(2024);
    for (int t = 0; t < 30; ++t) {
      const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
      const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
      ExactMatrix m = random_matrix(rng, rows, cols);
      RrefResult r = rref(m);
      CHECK(is_rref(r.reduced, r.pivots));
      CHECK(rref(r.reduced).reduced == r.reduced);
      // Row space preserved: every original row solves against the reduced rows.
      ExactMatrix reduced_t = r.reduced.transpose();
      for (std::size_t k = 0; k < rows; ++k) CHECK(solve_linear(reduced_t, m.row(k)).has_value());

      auto ns = nullspace_basis(m);
      CHECK(rank(m) + ns.size() == cols);
      for (const auto& v : ns) CHECK(m.apply(v) == ExactVector(rows));
      if (!ns.empty()) CHECK(rank(ExactMatrix::from_rows(ns)) == ns.size());
    }
  }

  TEST_CASE("sparse echelon agrees with dense rank and kernel") {
    SplitMix64 rng(99);
    for (int t = 0; t < 20; ++t) {
      const std::size_t rows = 5, cols = 6;
      ExactMatrix m = random_matrix(rng, rows, cols);
      SparseEchelon<GaussianRational> echelon(cols);
      for (std::size_t r = 0; r < rows; ++r) {
        SparseRow<GaussianRational> row;
        for (std::size_t c = 0; c < cols; ++c)
          if (!m(r, c).is_zero()) row[c] = m(r, c);
        echelon.add_row(row);
      }
      CHECK(echelon.rank() == rank(m));
      auto ns = echelon.nullspace_basis();
      CHECK(ns.size() == cols - rank(m));
      for (const auto& sparse : ns) {
        ExactVector v(cols);
        for (const auto& [c, x] : sparse) v[c] = x;
        CHECK(m.apply(v) == ExactVector(rows));
      }
    }
  }

  TEST_CASE("sample_rational_vector: determinism, bounds, golden") {
    CHECK(sample_rational_vector(3, 11, 4) == sample_rational_vector(3, 11, 4));
    for (const auto& z : sample_rational_vector(50, 5, 1)) {
      CHECK(z.is_real());
      CHECK((z.re() == -1 || z.re() == 0 || z.re() == 1));
    }
    for (const auto& z : sample_rational_vector(50, 6, 9)) {
      CHECK(abs(z.re().get_num()) <= 9);
      CHECK(z.re().get_den() <= 9);
    }
    CHECK_THROWS_AS(sample_rational_vector(3, 1, 0), InvalidArgument);

    // Frozen on first run; SplitMix64 is specified bit-for-bit so this is portable.
    const std::vector<Rational> golden{0, -5, Rational(6, 7), 0, Rational(-4, 3), Rational(-3, 4), 4, Rational(-4, 3), 6, 0};
    ExactVector expected;
    for (const auto& q : golden) expected.emplace_back(q);
    CHECK(sample_rational_vector(10, 42, 9) == expected);
  }

  TEST_CASE("splitmix64 reference values") {
    // Reference outputs of SplitMix64 seeded with 0.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
  }
}
