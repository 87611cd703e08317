#include "sympspin/symplectic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "sympspin/errors.hpp"

namespace sympspin {

namespace {

bool is_antisymmetric(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

std::vector<Rational> real_entries(const ExactMatrix& m, const char* what) {
  std::vector<Rational> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_real()) throw InvalidArgument(std::string(what) + " must be real");
      out.push_back(m(i, j).re());
    }
  }
  return out;
}

std::vector<std::vector<int>> support_of(const std::vector<Rational>& entries, int n) {
  std::vector<std::vector<int>> support(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(entries[static_cast<std::size_t>(i * n + j)])) support[static_cast<std::size_t>(i)].push_back(j);
  return support;
}

}  // namespace

SymplecticSpace::SymplecticSpace(int half_dim, ExactMatrix omega_lower) : l_(half_dim) {
  if (half_dim < 1) throw InvalidArgument("symplectic half-dimension must be >= 1");
  if (omega_lower.rows() != static_cast<std::size_t>(dim()) || omega_lower.cols() != static_cast<std::size_t>(dim())) {
    throw DimensionMismatch("omega must be a 2l x 2l matrix");
  }
  ExactMatrix upper = omega_inverse(omega_lower);
  lower_ = real_entries(omega_lower, "omega");
  upper_ = real_entries(upper, "omega inverse");
  lower_support_ = support_of(lower_, dim());
  upper_support_ = support_of(upper_, dim());
}

ExactMatrix SymplecticSpace::omega_lower_matrix() const {
  ExactMatrix m(static_cast<std::size_t>(dim()), static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) m(i, j) = omega_lower(i, j);
  return m;
}

ExactMatrix SymplecticSpace::omega_upper_matrix() const {
  ExactMatrix m(static_cast<std::size_t>(dim()), static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) m(i, j) = omega_upper(i, j);
  return m;
}

SymplecticSpace standard_symplectic_form(int l) {
  if (l < 1) throw InvalidArgument("standard_symplectic_form: l must be >= 1, got " + std::to_string(l));
  const auto n = static_cast<std::size_t>(2 * l);
  ExactMatrix omega(n, n);
  for (int i = 0; i < l; ++i) {
    omega(i, i + l) = GaussianRational(1);
    omega(i + l, i) = GaussianRational(-1);
  }
  return SymplecticSpace(l, std::move(omega));
}

const SymplecticSpace& standard_space(int l) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SymplecticSpace>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[l];
  if (!slot) slot = std::make_unique<SymplecticSpace>(standard_symplectic_form(l));
  return *slot;
}

ExactMatrix omega_inverse(const ExactMatrix& omega_lower) {
  if (!is_antisymmetric(omega_lower)) throw InvalidArgument("omega_inverse: input must be square and antisymmetric");
  const std::size_t n = omega_lower.rows();
  ExactMatrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = omega_lower(i, j);
    augmented(i, n + i) = GaussianRational(1);
  }
  RrefResult r = rref(augmented);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw SingularMatrix("omega_inverse: omega is degenerate");
  // Right block is omega^{-1}; omega_upper(j, k) = (omega^{-1})(k, j).
  ExactMatrix upper(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) upper(j, k) = r.reduced(k, n + j);
  return upper;
}

// --- Tensor ------------------------------------------------------------------

Tensor::Tensor(int dim, std::vector<Variance> slots) : dim_(dim), slots_(std::move(slots)) {
  if (dim < 1) throw InvalidArgument("tensor dimension must be >= 1");
  std::size_t n = 1;
  for (std::size_t k = 0; k < slots_.size(); ++k) n *= static_cast<std::size_t>(dim);
  data_.resize(n);
}

Tensor Tensor::covariant(int dim, int rank) {
  return Tensor(dim, std::vector<Variance>(static_cast<std::size_t>(rank), Variance::Lower));
}

std::size_t Tensor::offset(std::span<const int> idx) const {
  if (idx.size() != slots_.size()) throw DimensionMismatch("tensor index has wrong rank");
  std::size_t off = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw InvalidArgument("tensor index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return off;
}

std::vector<int> Tensor::unflatten(std::size_t k) const {
  std::vector<int> idx(slots_.size());
  for (std::size_t p = slots_.size(); p-- > 0;) {
    idx[p] = static_cast<int>(k % static_cast<std::size_t>(dim_));
    k /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

bool Tensor::is_zero() const {
  for (const auto& x : data_)
    if (!sympspin::is_zero(x)) return false;
  return true;
}

void Tensor::require_same_shape(const Tensor& o) const {
  if (dim_ != o.dim_ || slots_ != o.slots_) throw DimensionMismatch("tensor shapes differ");
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_same_shape(o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_same_shape(o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Tensor& Tensor::scale(const Rational& factor) {
  for (auto& x : data_) x *= factor;
  return *this;
}

Tensor raise_lower_index(const Tensor& tensor, int slot, IndexMove move, const SymplecticSpace& space) {
  if (slot < 0 || slot >= tensor.rank()) {
    throw InvalidArgument("raise_lower_index: slot " + std::to_string(slot) + " out of range for rank " +
                          std::to_string(tensor.rank()));
  }
  if (tensor.dim() != space.dim()) throw DimensionMismatch("raise_lower_index: tensor and space dimensions differ");
  const Variance from = move == IndexMove::Raise ? Variance::Lower : Variance::Upper;
  const Variance to = move == IndexMove::Raise ? Variance::Upper : Variance::Lower;
  if (tensor.slots()[static_cast<std::size_t>(slot)] != from) {
    throw InvalidArgument("raise_lower_index: slot " + std::to_string(slot) + " already has the requested variance");
  }

  std::vector<Variance> slots = tensor.slots();
  slots[static_cast<std::size_t>(slot)] = to;
  Tensor out(tensor.dim(), std::move(slots));

  for (std::size_t k = 0; k < out.size(); ++k) {
    std::vector<int> idx = out.unflatten(k);
    const int i = idx[static_cast<std::size_t>(slot)];
    Rational acc;
    if (move == IndexMove::Raise) {
      for (int c : space.upper_support(i)) {
        idx[static_cast<std::size_t>(slot)] = c;
        acc += space.omega_upper(i, c) * tensor.at(idx);
      }
    } else {
      // Column i of omega_lower: rows t with omega_lower(t, i) != 0. omega is antisymmetric,
      // so these are exactly the columns of row i.
      for (int t : space.lower_support(i)) {
        idx[static_cast<std::size_t>(slot)] = t;
        acc += tensor.at(idx) * space.omega_lower(t, i);
      }
    }
    out.flat(k) = std::move(acc);
  }
  return out;
}

Tensor with_variance(const Tensor& tensor, const std::vector<Variance>& target, const SymplecticSpace& space) {
  if (target.size() != tensor.slots().size()) throw DimensionMismatch("with_variance: rank mismatch");
  Tensor out = tensor;
  for (std::size_t s = 0; s < target.size(); ++s) {
    if (out.slots()[s] == target[s]) continue;
    out = raise_lower_index(out, static_cast<int>(s), target[s] == Variance::Upper ? IndexMove::Raise : IndexMove::Lower,
                            space);
  }
  return out;
}

}  // namespace sympspin
