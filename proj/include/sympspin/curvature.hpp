#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympspin/symplectic.hpp"

namespace sympspin {

/// Outcome of one identity over all index tuples; `witness` is the first violating
/// (i, j, k, l), 0-based.
struct IdentityCheck {
  bool holds = true;
  std::optional<std::array<int, 4>> witness;
};

/// The four linear symmetries of a symplectic curvature tensor R_{ijkl}:
///   antisymmetry      R_{ijkl} = -R_{ijlk}
///   bianchi           R_{ijkl} + R_{iklj} + R_{iljk} = 0
///   symmetry          R_{ijkl} = R_{jikl}
///   extended_bianchi  R_{ijkl} + R_{jkli} + R_{klij} + R_{lijk} = 0
struct SymmetryReport {
  IdentityCheck antisymmetry;
  IdentityCheck bianchi;
  IdentityCheck symmetry;
  IdentityCheck extended_bianchi;

  /// The three defining identities (the extended one is a consequence).
  bool defining() const { return antisymmetry.holds && bianchi.holds && symmetry.holds; }
  bool all() const { return defining() && extended_bianchi.holds; }
  std::string describe() const;
};

/// Checks a rank-4 all-lower tensor. Throws DimensionMismatch for other shapes.
SymmetryReport check_symmetries(const Tensor& r);

/// Rank-4 real tensor satisfying the antisymmetry, Bianchi and symmetry identities.
class CurvatureTensor {
 public:
  /// Throws SymmetryViolation when a defining identity fails.
  explicit CurvatureTensor(Tensor entries);
  static CurvatureTensor zero(int l);

  int l() const { return entries_.dim() / 2; }
  const Tensor& tensor() const { return entries_; }
  const Rational& operator()(int i, int j, int k, int l) const { return entries_({i, j, k, l}); }

  friend CurvatureTensor operator+(const CurvatureTensor& a, const CurvatureTensor& b) {
    return CurvatureTensor(a.entries_ + b.entries_);
  }
  friend CurvatureTensor operator-(const CurvatureTensor& a, const CurvatureTensor& b) {
    return CurvatureTensor(a.entries_ - b.entries_);
  }
  friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) { return a.entries_ == b.entries_; }

 private:
  Tensor entries_;
};

/// Symmetric 2l x 2l tensor sigma_{ij}.
class RicciTensor {
 public:
  /// Throws InvalidArgument unless rank 2, all lower, and symmetric.
  explicit RicciTensor(Tensor entries);
  static RicciTensor zero(int l);

  int l() const { return entries_.dim() / 2; }
  const Tensor& tensor() const { return entries_; }
  const Rational& operator()(int i, int j) const { return entries_({i, j}); }

  friend bool operator==(const RicciTensor& a, const RicciTensor& b) { return a.entries_ == b.entries_; }

 private:
  Tensor entries_;
};

/// The six omega-traces W^{ijkl} omega_{ab} over the slot pairs (ij), (ik), (il), (jk), (jl), (kl),
/// each a rank-2 tensor with both remaining indices up.
std::array<Tensor, 6> omega_traces(const Tensor& lower4, const SymplecticSpace& space);
bool is_trace_free(const Tensor& lower4, const SymplecticSpace& space);

/// Curvature tensor that is also totally trace-free.
class WeylTensor {
 public:
  /// Throws SymmetryViolation unless every omega-trace vanishes.
  explicit WeylTensor(CurvatureTensor curvature);

  int l() const { return curvature_.l(); }
  const CurvatureTensor& curvature() const { return curvature_; }
  const Tensor& tensor() const { return curvature_.tensor(); }

  friend bool operator==(const WeylTensor& a, const WeylTensor& b) { return a.curvature_ == b.curvature_; }

 private:
  CurvatureTensor curvature_;
};

/// Exact nullspace basis of a linear constraint system on rank-4 tensors.
struct ConstraintSpace {
  int l = 0;
  std::vector<Tensor> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Solutions of antisymmetry + Bianchi + symmetry. Built on first use per l and cached.
const ConstraintSpace& curvature_space(int l);
/// curvature_space constraints plus all six omega-traces.
const ConstraintSpace& weyl_space(int l);

/// Random rational combination of the curvature_space basis; deterministic per seed.
CurvatureTensor random_curvature(int l, std::uint64_t seed);
/// Random rational combination of the weyl_space basis; deterministic per seed.
/// For l = 1 the space is trivial and the result is zero.
WeylTensor random_weyl(int l, std::uint64_t seed);
RicciTensor random_ricci(int l, std::uint64_t seed);

/// sigma_{ij} = sum_{m,a} omega^{ma} R_{ajmi}, i.e. the trace of V -> R(V, e_i) e_j.
RicciTensor ricci_of(const CurvatureTensor& r);
/// Validating overload for raw tensors; throws SymmetryViolation.
RicciTensor ricci_of(const Tensor& r);

/// sigma~_{ijkl} = 1/(2(l+1)) (omega_il s_jk - omega_ik s_jl + omega_jl s_ik - omega_jk s_il + 2 s_ij omega_kl)
CurvatureTensor sigma_tilde_of(const RicciTensor& sigma);

/// W = R - sigma~(sigma(R)).
WeylTensor weyl_of(const CurvatureTensor& r);

}  // namespace sympspin
