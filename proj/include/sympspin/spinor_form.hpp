#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "sympspin/poly_spinor.hpp"

namespace sympspin {

/// Strictly increasing tuple of covector indices, stored as a bitmask (bit i <-> epsilon^i).
using FormIndex = std::uint32_t;

std::vector<int> form_tuple(FormIndex mask);
/// Throws InvalidArgument unless the tuple is strictly increasing and within [0, 2l).
FormIndex form_index(std::span<const int> tuple, int l);

/// Element of Lambda^r V* (x) S: spinor components on increasing r-tuples.
///
/// Degrees -1 and 2l+1 are permitted as always-zero forms, so that X and Y compose
/// uniformly at the ends of the exterior algebra.
class SpinorForm {
 public:
  using Components = std::map<FormIndex, PolySpinor>;

  SpinorForm(int l, int degree, int cap);

  /// The 0-form 1 (x) s.
  static SpinorForm scalar(const PolySpinor& s);

  int l() const { return l_; }
  int degree() const { return degree_; }
  int cap() const { return cap_; }
  const Components& components() const { return components_; }
  PolySpinor component(FormIndex mask) const;
  bool is_zero() const { return components_.empty(); }

  /// Adds factor * (epsilon^mask (x) s).
  void add(FormIndex mask, const PolySpinor& s, const GaussianRational& factor = GaussianRational(1));
  /// Adds factor * (epsilon^a ^ epsilon^b (x) s) to a 2-form, for arbitrary a, b.
  void add_wedge_pair(int a, int b, const PolySpinor& s, const GaussianRational& factor = GaussianRational(1));

  SpinorForm with_cap(int cap) const;

  SpinorForm& operator+=(const SpinorForm& o);
  SpinorForm& operator-=(const SpinorForm& o);
  SpinorForm& operator*=(const GaussianRational& factor);
  SpinorForm& add_scaled(const GaussianRational& factor, const SpinorForm& o);

  friend SpinorForm operator+(SpinorForm a, const SpinorForm& b) { return a += b; }
  friend SpinorForm operator-(SpinorForm a, const SpinorForm& b) { return a -= b; }
  friend SpinorForm operator*(const GaussianRational& f, SpinorForm a) { return a *= f; }

  friend bool operator==(const SpinorForm& a, const SpinorForm& b) {
    return a.l_ == b.l_ && a.degree_ == b.degree_ && a.cap_ == b.cap_ && a.components_ == b.components_;
  }

 private:
  void require_compatible(const SpinorForm& o) const;

  int l_;
  int degree_;
  int cap_;
  Components components_;
};

/// epsilon^i ^ phi.
SpinorForm wedge(int i, const SpinorForm& phi);
/// (sum_i xi_i epsilon^i) ^ phi.
SpinorForm wedge_covector(std::span<const GaussianRational> xi, const SpinorForm& phi);
/// Interior product iota_{e_i} phi. Zero (-1)-form on 0-forms.
SpinorForm contract(int i, const SpinorForm& phi);

/// X(alpha (x) s) = - sum_i epsilon^i ^ alpha (x) e_i . s
SpinorForm op_X(const SpinorForm& phi);
/// Y(alpha (x) s) = sum_{ij} omega^{ij} iota_{e_i} alpha (x) e_j . s
SpinorForm op_Y(const SpinorForm& phi);
/// H = XY + YX; acts as i (r - l) on r-forms.
SpinorForm op_H(const SpinorForm& phi);

enum class Projector { P10, P11, P20, P21, P22 };

std::string_view projector_name(Projector p);
/// Form degree a projector acts on (1 or 2).
int projector_degree(Projector p);

/// Isotypic projectors, composed from X and Y:
///   p10 = (i/l) XY,                                   p11 = Id - p10            (1-forms)
///   p20 = (1/l) X^2 Y^2
///   p21 = -i/(1-l) (XY - (i/l) X^2 Y^2)
///   p22 = Id + i/(1-l) XY + 1/(1-l) X^2 Y^2                                    (2-forms)
/// Throws InvalidArgument for l < 2 or a form of the wrong degree, DegreeOverflow when an
/// intermediate spinor exceeds the cap. Four degrees of headroom always suffice.
SpinorForm project(Projector which, const SpinorForm& phi);

struct TwoFormParts {
  SpinorForm e20;
  SpinorForm e21;
  SpinorForm e22;
};

TwoFormParts decompose_two_form(const SpinorForm& phi);

/// sp(2l) action on Lambda^r V* (x) S: the dual action (A.eta)(v) = -eta(A v) on covectors as a
/// derivation, plus sp_action on the spinor factor.
SpinorForm sp_action_form(const SpLieElement& a, const SpinorForm& phi);

/// Random r-form with random_spinor components on every tuple.
SpinorForm random_form(int l, int degree, int max_spinor_degree, int cap, SplitMix64& rng, std::int64_t bound = 5);

/// Keeps only the spinor monomials of the given parity (0 = even, 1 = odd) in every component.
SpinorForm parity_part(const SpinorForm& phi, int parity);

}  // namespace sympspin
