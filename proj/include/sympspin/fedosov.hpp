#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sympspin/curvature.hpp"
#include "sympspin/monomial.hpp"

namespace sympspin {

/// Polynomial with real rational coefficients in a fixed number of variables.
class RationalPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit RationalPolynomial(int vars = 1);
  static RationalPolynomial constant(int vars, const Rational& value);

  int vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const Monomial& m, const Rational& coeff);

  RationalPolynomial derivative(int var) const;
  Rational evaluate(std::span<const Rational> point) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& scale(const Rational& factor);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// e.g. "3/2*x1^2*x3 - x2"; variables are 1-based.
  std::string to_string() const;

 private:
  int vars_;
  Terms terms_;
};

/// Christoffel data Gamma_{ijk} on flat R^{2l} with the standard constant omega.
/// The connection is nabla_{e_j} e_k = Gamma^m_{jk} e_m with Gamma^m_{jk} = sum_i omega^{mi} Gamma_{ijk}.
class PolynomialConnection {
 public:
  /// `gamma` has (2l)^3 entries, row-major in (i, j, k).
  PolynomialConnection(int l, int degree_cap, std::vector<RationalPolynomial> gamma);

  static PolynomialConnection flat(int l);

  int l() const { return l_; }
  int dim() const { return 2 * l_; }
  int degree_cap() const { return degree_cap_; }
  const RationalPolynomial& operator()(int i, int j, int k) const { return gamma_[index(i, j, k)]; }
  /// Copy with one entry replaced (no symmetrization); used to build negative controls.
  PolynomialConnection with_entry(int i, int j, int k, RationalPolynomial p) const;

  bool is_totally_symmetric() const;

  /// Gamma^m_{jk}.
  RationalPolynomial raised(int m, int j, int k) const;

  friend bool operator==(const PolynomialConnection& a, const PolynomialConnection& b) {
    return a.l_ == b.l_ && a.degree_cap_ == b.degree_cap_ && a.gamma_ == b.gamma_;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    const auto n = static_cast<std::size_t>(dim());
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n + static_cast<std::size_t>(k);
  }

  int l_;
  int degree_cap_;
  std::vector<RationalPolynomial> gamma_;
};

/// Totally symmetric Gamma with random rational coefficients on every monomial of degree <= degree.
PolynomialConnection random_connection(int l, int degree, std::uint64_t seed);

struct ConnectionAxiomReport {
  bool symplectic = true;    // nabla omega = 0
  bool torsion_free = true;  // T = 0
  /// Human-readable description of the first nonzero component, empty when both hold.
  std::string offending;
  bool passed() const { return symplectic && torsion_free; }
};

/// Verifies nabla omega = 0 and torsion-freeness as polynomial identities:
///   (nabla_i omega)_{jk} = -Gamma^m_{ij} omega_{mk} - Gamma^m_{ik} omega_{jm}
///   T^m_{jk} = Gamma^m_{jk} - Gamma^m_{kj}
ConnectionAxiomReport check_connection_axioms(const PolynomialConnection& gamma);

/// Polynomial curvature of a connection, both before and after lowering.
class CurvatureField {
 public:
  CurvatureField(int l, std::vector<RationalPolynomial> mixed, std::vector<RationalPolynomial> lowered);

  int l() const { return l_; }
  /// R^m_{jkl}: R(e_k, e_l) e_j = R^m_{jkl} e_m.
  const RationalPolynomial& mixed(int m, int j, int k, int l) const { return mixed_[index(m, j, k, l)]; }
  /// R_{ijkl} = omega(R(e_k, e_l) e_j, e_i) = sum_m omega_{mi} R^m_{jkl}.
  const RationalPolynomial& lowered(int i, int j, int k, int l) const { return lowered_[index(i, j, k, l)]; }

  bool is_zero() const;

 private:
  std::size_t index(int a, int b, int c, int d) const {
    const auto n = static_cast<std::size_t>(2 * l_);
    return ((static_cast<std::size_t>(a) * n + b) * n + c) * n + d;
  }

  int l_;
  std::vector<RationalPolynomial> mixed_;
  std::vector<RationalPolynomial> lowered_;
};

/// R^m_{jkl} = d_k Gamma^m_{lj} - d_l Gamma^m_{kj} + Gamma^m_{ka} Gamma^a_{lj} - Gamma^m_{la} Gamma^a_{kj},
/// lowered with R_{ijkl} = sum_m omega_{mi} R^m_{jkl}. Throws InvalidArgument if the axioms fail.
CurvatureField curvature_field_of(const PolynomialConnection& gamma);

/// Exact evaluation; throws SymmetryViolation if the value is not a curvature tensor.
CurvatureTensor evaluate_curvature_at(const CurvatureField& field, std::span<const Rational> point);

/// Direct trace sigma_{ij} = sum_m R^m_{jmi} of the unlowered field: Tr(V -> R(V, e_i) e_j).
/// Independent of the lowering convention; used to pin its sign.
Tensor trace_ricci_at(const CurvatureField& field, std::span<const Rational> point);

}  // namespace sympspin
