#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sympspin/errors.hpp"
#include "sympspin/gaussian_rational.hpp"

namespace sympspin {

using ExactVector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  /// All rows must have equal length.
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  ExactVector row(std::size_t r) const;
  ExactMatrix transpose() const;
  bool is_zero() const;

  /// m * v; throws DimensionMismatch when v.size() != cols().
  ExactVector apply(const ExactVector& v) const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

struct RrefResult {
  ExactMatrix reduced;
  /// Strictly increasing pivot columns, one per nonzero row of `reduced`.
  std::vector<std::size_t> pivots;
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column of the RREF (free entry 1, other free entries 0).
std::vector<ExactVector> nullspace_basis(const ExactMatrix& m);

/// A particular solution of m x = b, or nullopt when the system is inconsistent.
/// Throws DimensionMismatch when b.size() != m.rows().
std::optional<ExactVector> solve_linear(const ExactMatrix& m, const ExactVector& b);

/// Sparse row keyed by column.
template <class Scalar>
using SparseRow = std::map<std::size_t, Scalar>;

/// Incremental reduced row echelon form over sparse rows.
///
/// Rows are added one at a time; after every insertion the stored rows are fully
/// reduced (each pivot column is zero in every other stored row). Used for the large
/// but very sparse curvature constraint systems.
template <class Scalar>
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

  /// Returns true if the row was independent of the rows already present.
  bool add_row(SparseRow<Scalar> row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  /// Pivot column -> reduced row with leading coefficient 1.
  const std::map<std::size_t, SparseRow<Scalar>>& rows() const { return rows_; }

  std::vector<SparseRow<Scalar>> nullspace_basis() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow<Scalar>> rows_;
};

extern template class SparseEchelon<Rational>;
extern template class SparseEchelon<GaussianRational>;

}  // namespace sympspin
