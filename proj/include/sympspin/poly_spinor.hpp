#pragma once

#include <map>
#include <span>
#include <utility>

#include "sympspin/gaussian_rational.hpp"
#include "sympspin/monomial.hpp"
#include "sympspin/sampling.hpp"
#include "sympspin/symplectic.hpp"

namespace sympspin {

/// Truncated polynomial model of a symplectic spinor: a polynomial in l variables with
/// Q(i) coefficients and total degree at most `cap`.
///
/// Zero coefficients are never stored, so equality of the term maps is equality of spinors.
/// Any operation that would produce a monomial above the cap throws DegreeOverflow.
class PolySpinor {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  PolySpinor(int l, int cap);

  static PolySpinor constant(int l, int cap, const GaussianRational& value);
  static PolySpinor monomial(int l, int cap, std::span<const int> alpha, const GaussianRational& coeff);

  int l() const { return l_; }
  int cap() const { return cap_; }
  /// Highest total degree present, -1 for the zero spinor.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  GaussianRational coefficient(const Monomial& m) const;

  /// Adds coeff * x^m.
  void add_term(const Monomial& m, const GaussianRational& coeff);

  /// Same polynomial with a different cap; throws DegreeOverflow if it no longer fits.
  PolySpinor with_cap(int cap) const;

  /// x^var * s.
  PolySpinor times_variable(int var) const;
  /// d s / d x^var.
  PolySpinor derivative(int var) const;

  PolySpinor operator-() const;
  PolySpinor& operator+=(const PolySpinor& o);
  PolySpinor& operator-=(const PolySpinor& o);
  PolySpinor& operator*=(const GaussianRational& factor);
  /// this += factor * o
  PolySpinor& add_scaled(const GaussianRational& factor, const PolySpinor& o);

  friend PolySpinor operator+(PolySpinor a, const PolySpinor& b) { return a += b; }
  friend PolySpinor operator-(PolySpinor a, const PolySpinor& b) { return a -= b; }
  friend PolySpinor operator*(const GaussianRational& f, PolySpinor a) { return a *= f; }

  friend bool operator==(const PolySpinor& a, const PolySpinor& b) {
    return a.l_ == b.l_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const PolySpinor& o) const;

  int l_;
  int cap_;
  Terms terms_;
};

/// Symplectic Clifford multiplication by the basis vector e_i (0-based):
///   i <  l:  e_i . s     = i * x^i * s       (raises degree by one)
///   i >= l:  e_i . s     = d s / d x^{i-l}   (lowers degree by one)
PolySpinor clifford_basis(int i, const PolySpinor& s);

/// sum_i v^i (e_i . s), v given in the basis e_0..e_{2l-1}.
PolySpinor clifford_vector(std::span<const GaussianRational> v, const PolySpinor& s);

/// Clifford product e_{i_1} . e_{i_2} ... e_{i_k} . s, rightmost factor applied first.
PolySpinor clifford_word(std::span<const int> word, const PolySpinor& s);

/// (even-degree part, odd-degree part).
std::pair<PolySpinor, PolySpinor> parity_decompose(const PolySpinor& s);

/// Element of sp(2l) through S^2 V: a symmetric 2l x 2l rational matrix A^{ab}.
///
/// As an endomorphism of V it acts by v -> sum_{ab} A^{ab} omega(e_a, v) e_b, so the generator
/// a v b (A^{ab} = A^{ba} = 1) acts as v -> omega(a, v) b + omega(b, v) a.
class SpLieElement {
 public:
  /// Throws InvalidArgument unless the matrix is square and symmetric.
  explicit SpLieElement(Tensor matrix);

  static SpLieElement zero(int l);
  /// The generator e_a v e_b.
  static SpLieElement generator(int l, int a, int b);

  int l() const { return matrix_.dim() / 2; }
  const Tensor& matrix() const { return matrix_; }
  const Rational& operator()(int a, int b) const { return matrix_({a, b}); }

  /// Matrix of the endomorphism v -> A(v) in the basis e_i: column j is A(e_j).
  Tensor endomorphism(const SymplecticSpace& space) const;

  friend bool operator==(const SpLieElement& a, const SpLieElement& b) { return a.matrix_ == b.matrix_; }

 private:
  Tensor matrix_;
};

/// Bracket corresponding to the commutator of endomorphisms: [A, B] = A omega B - B omega A.
SpLieElement lie_bracket(const SpLieElement& a, const SpLieElement& b, const SymplecticSpace& space);

/// Scale c in sp_action(A) = c * sum_{ab} A^{ab} e_a . e_b; fixed by the commutation identity
/// [sp_action(A), v.] = (A v). and checked against it in the test suite. c = i/2.
GaussianRational sp_action_scale();

/// Infinitesimal metaplectic action on spinors, realized by quadratic Clifford elements.
/// Raises degree by at most two.
PolySpinor sp_action(const SpLieElement& a, const PolySpinor& s);

/// Spinor with random coefficients on every monomial of degree <= max_degree.
/// `density` in (0, 1] is the probability of a monomial being populated.
PolySpinor random_spinor(int l, int max_degree, int cap, SplitMix64& rng, std::int64_t bound = 5,
                         double density = 0.6);

/// Random symmetric matrix with entries bounded by `bound`.
SpLieElement random_sp_element(int l, SplitMix64& rng, std::int64_t bound = 5);

}  // namespace sympspin
