#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "sympspin/exact_matrix.hpp"
#include "sympspin/gaussian_rational.hpp"

namespace sympspin {

/// Symplectic vector space (V, omega) of dimension 2l in the fixed Darboux basis.
///
/// Indices are 0-based: e_0..e_{l-1} span the first Lagrangian, e_l..e_{2l-1} the second.
/// omega_lower(i, j) = omega(e_i, e_j) and omega_upper is defined by
///   sum_k omega_lower(i, k) * omega_upper(j, k) = delta(i, j).
class SymplecticSpace {
 public:
  SymplecticSpace(int half_dim, ExactMatrix omega_lower);

  int half_dim() const { return l_; }
  int dim() const { return 2 * l_; }

  const Rational& omega_lower(int i, int j) const { return lower_[index(i, j)]; }
  const Rational& omega_upper(int i, int j) const { return upper_[index(i, j)]; }

  ExactMatrix omega_lower_matrix() const;
  ExactMatrix omega_upper_matrix() const;

  /// For each row i, the columns j with omega_lower(i, j) != 0.
  const std::vector<int>& lower_support(int i) const { return lower_support_[static_cast<std::size_t>(i)]; }
  /// For each row i, the columns j with omega_upper(i, j) != 0.
  const std::vector<int>& upper_support(int i) const { return upper_support_[static_cast<std::size_t>(i)]; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * dim() + j); }

  int l_;
  std::vector<Rational> lower_;
  std::vector<Rational> upper_;
  std::vector<std::vector<int>> lower_support_;
  std::vector<std::vector<int>> upper_support_;
};

/// omega_{ij} = 1 iff i < l and j = i + l; -1 iff i >= l and j = i - l; 0 otherwise.
/// Throws InvalidArgument for l < 1.
SymplecticSpace standard_symplectic_form(int l);

/// Process-wide cached instance of standard_symplectic_form(l).
const SymplecticSpace& standard_space(int l);

/// Solves sum_k omega_lower(i,k) omega_upper(j,k) = delta_ij. The result is transpose(inverse(omega_lower)).
/// Throws InvalidArgument if the input is not square and antisymmetric, SingularMatrix if not invertible.
ExactMatrix omega_inverse(const ExactMatrix& omega_lower);

enum class Variance { Lower, Upper };
enum class IndexMove { Raise, Lower };

/// Dense multi-index array of real rationals, with a variance tag per slot.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int dim, std::vector<Variance> slots);

  /// All-lower tensor of the given rank.
  static Tensor covariant(int dim, int rank);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(slots_.size()); }
  const std::vector<Variance>& slots() const { return slots_; }
  std::size_t size() const { return data_.size(); }

  Rational& at(std::span<const int> idx) { return data_[offset(idx)]; }
  const Rational& at(std::span<const int> idx) const { return data_[offset(idx)]; }
  Rational& operator()(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }
  const Rational& operator()(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  Rational& flat(std::size_t k) { return data_[k]; }
  const Rational& flat(std::size_t k) const { return data_[k]; }

  /// Multi-index of a flat position.
  std::vector<int> unflatten(std::size_t k) const;
  std::size_t offset(std::span<const int> idx) const;

  bool is_zero() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& scale(const Rational& factor);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.slots_ == b.slots_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Tensor& o) const;

  int dim_ = 0;
  std::vector<Variance> slots_;
  std::vector<Rational> data_;
};

/// Raises or lowers one slot with omega.
///
///   raise slot s:  T'[.. i ..] = sum_c omega_upper(i, c) T[.. c ..]
///   lower slot s:  T'[.. i ..] = sum_t T[.. t ..] omega_lower(t, i)
///
/// The new index is the first omega index on raising and the second on lowering, so the
/// two moves are mutually inverse. Throws InvalidArgument when the slot is out of range or
/// already has the requested variance.
Tensor raise_lower_index(const Tensor& tensor, int slot, IndexMove move, const SymplecticSpace& space);

/// Applies raise_lower_index to every slot whose variance differs from `target`.
Tensor with_variance(const Tensor& tensor, const std::vector<Variance>& target, const SymplecticSpace& space);

}  // namespace sympspin
