#include "sympspin/exact_matrix.hpp"

#include <string>
#include <utility>

namespace sympspin {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = GaussianRational(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows in ExactMatrix::from_rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

ExactVector ExactMatrix::apply(const ExactVector& v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("matrix has " + std::to_string(cols_) + " columns, vector has " +
                            std::to_string(v.size()) + " entries");
  }
  ExactVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      out[r] += a * v[c];
    }
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult result{m, {}};
  ExactMatrix& a = result.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows() && a(found, col).is_zero()) ++found;
    if (found == a.rows()) continue;

    if (found != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(found, c), a(pivot_row, c));
    }
    GaussianRational inv = a(pivot_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) {
      if (!a(pivot_row, c).is_zero()) a(pivot_row, c) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col).is_zero()) continue;
      GaussianRational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(pivot_row, c).is_zero()) a(r, c) -= factor * a(pivot_row, c);
      }
    }
    result.pivots.push_back(col);
    ++pivot_row;
  }
  return result;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

std::vector<ExactVector> nullspace_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = GaussianRational(1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactVector> solve_linear(const ExactMatrix& m, const ExactVector& b) {
  if (b.size() != m.rows()) {
    throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                            std::to_string(m.rows()) + " rows");
  }
  ExactMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  RrefResult r = rref(augmented);
  ExactVector x(m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] == m.cols()) return std::nullopt;
    x[r.pivots[k]] = r.reduced(k, m.cols());
  }
  return x;
}

// --- SparseEchelon ---------------------------------------------------------

namespace {

// target -= factor * source
template <class Scalar>
void subtract_scaled(SparseRow<Scalar>& target, const Scalar& factor, const SparseRow<Scalar>& source) {
  for (const auto& [col, value] : source) {
    auto [it, inserted] = target.try_emplace(col);
    it->second -= factor * value;
    if (is_zero(it->second)) target.erase(it);
  }
}

}  // namespace

template <class Scalar>
bool SparseEchelon<Scalar>::add_row(SparseRow<Scalar> row) {
  for (auto it = row.begin(); it != row.end();) {
    if (is_zero(it->second)) {
      it = row.erase(it);
    } else {
      ++it;
    }
  }
  if (!row.empty() && row.rbegin()->first >= cols_) {
    throw DimensionMismatch("sparse row column out of range");
  }

  // Eliminate existing pivots. Reduced rows never introduce pivot columns, so one pass suffices.
  std::vector<std::size_t> hits;
  for (const auto& entry : row) {
    if (rows_.count(entry.first)) hits.push_back(entry.first);
  }
  for (auto col : hits) {
    auto it = row.find(col);
    if (it == row.end()) continue;
    Scalar factor = it->second;
    subtract_scaled(row, factor, rows_.at(col));
  }
  if (row.empty()) return false;

  std::size_t pivot = row.begin()->first;
  Scalar inv = inverse(row.begin()->second);
  for (auto& entry : row) entry.second *= inv;
  for (auto& entry : rows_) {
    auto& other = entry.second;
    auto it = other.find(pivot);
    if (it == other.end()) continue;
    Scalar factor = it->second;
    subtract_scaled(other, factor, row);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

template <class Scalar>
std::vector<SparseRow<Scalar>> SparseEchelon<Scalar>::nullspace_basis() const {
  // Column -> list of (pivot, coefficient) for rows that mention it.
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_column;
  for (const auto& [pivot, row] : rows_) {
    for (const auto& [col, value] : row) {
      if (col != pivot) by_column[col].emplace_back(pivot, value);
    }
  }
  std::vector<SparseRow<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (rows_.count(free)) continue;
    SparseRow<Scalar> v;
    v.emplace(free, Scalar(1));
    auto it = by_column.find(free);
    if (it != by_column.end()) {
      for (const auto& [pivot, value] : it->second) v.emplace(pivot, -value);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template class SparseEchelon<Rational>;
template class SparseEchelon<GaussianRational>;

}  // namespace sympspin
