#include "sympspin/spinor_form.hpp"

#include <bit>
#include <string>

#include "sympspin/errors.hpp"

namespace sympspin {

namespace {

/// (-1)^(number of set bits below position i).
int wedge_sign(FormIndex mask, int i) {
  const FormIndex below = mask & ((FormIndex{1} << i) - 1);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

void require_spinor_degree(int l, int degree) {
  if (degree < 0 || degree > 2 * l) {
    throw InvalidArgument("form degree " + std::to_string(degree) + " cannot carry components");
  }
}

}  // namespace

std::vector<int> form_tuple(FormIndex mask) {
  std::vector<int> tuple;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) tuple.push_back(i);
  }
  return tuple;
}

FormIndex form_index(std::span<const int> tuple, int l) {
  FormIndex mask = 0;
  int previous = -1;
  for (int i : tuple) {
    if (i <= previous) throw InvalidArgument("form index tuple must be strictly increasing");
    if (i >= 2 * l) throw InvalidArgument("form index out of range");
    mask |= FormIndex{1} << i;
    previous = i;
  }
  return mask;
}

// --- SpinorForm -----------------------------------------------------------------------

SpinorForm::SpinorForm(int l, int degree, int cap) : l_(l), degree_(degree), cap_(cap) {
  if (l < 1 || 2 * l > 31) throw InvalidArgument("SpinorForm: l out of range");
  if (degree < -1 || degree > 2 * l + 1) throw InvalidArgument("SpinorForm: degree out of range");
  if (cap < 0) throw InvalidArgument("SpinorForm: negative cap");
}

SpinorForm SpinorForm::scalar(const PolySpinor& s) {
  SpinorForm form(s.l(), 0, s.cap());
  form.add(0, s);
  return form;
}

PolySpinor SpinorForm::component(FormIndex mask) const {
  auto it = components_.find(mask);
  return it == components_.end() ? PolySpinor(l_, cap_) : it->second;
}

void SpinorForm::add(FormIndex mask, const PolySpinor& s, const GaussianRational& factor) {
  if (s.l() != l_ || s.cap() != cap_) throw DimensionMismatch("SpinorForm::add: spinor l/cap mismatch");
  if (s.is_zero() || factor.is_zero()) return;
  require_spinor_degree(l_, degree_);
  if (std::popcount(mask) != degree_ || (mask >> (2 * l_)) != 0) {
    throw InvalidArgument("SpinorForm::add: index does not match form degree");
  }
  auto [it, inserted] = components_.try_emplace(mask, l_, cap_);
  it->second.add_scaled(factor, s);
  if (it->second.is_zero()) components_.erase(it);
}

void SpinorForm::add_wedge_pair(int a, int b, const PolySpinor& s, const GaussianRational& factor) {
  if (degree_ != 2) throw InvalidArgument("add_wedge_pair needs a 2-form");
  if (a == b) return;
  if (a < b) {
    add((FormIndex{1} << a) | (FormIndex{1} << b), s, factor);
  } else {
    add((FormIndex{1} << a) | (FormIndex{1} << b), s, -factor);
  }
}

SpinorForm SpinorForm::with_cap(int cap) const {
  SpinorForm out(l_, degree_, cap);
  for (const auto& [mask, s] : components_) out.components_.emplace(mask, s.with_cap(cap));
  return out;
}

void SpinorForm::require_compatible(const SpinorForm& o) const {
  if (l_ != o.l_ || cap_ != o.cap_ || degree_ != o.degree_) {
    throw DimensionMismatch("SpinorForm operands differ in l, cap or degree (" + std::to_string(degree_) + " vs " +
                            std::to_string(o.degree_) + ")");
  }
}

SpinorForm& SpinorForm::operator+=(const SpinorForm& o) { return add_scaled(GaussianRational(1), o); }

SpinorForm& SpinorForm::operator-=(const SpinorForm& o) { return add_scaled(GaussianRational(-1), o); }

SpinorForm& SpinorForm::operator*=(const GaussianRational& factor) {
  if (factor.is_zero()) {
    components_.clear();
    return *this;
  }
  for (auto& [mask, s] : components_) s *= factor;
  return *this;
}

SpinorForm& SpinorForm::add_scaled(const GaussianRational& factor, const SpinorForm& o) {
  require_compatible(o);
  for (const auto& [mask, s] : o.components_) add(mask, s, factor);
  return *this;
}

// --- exterior operations --------------------------------------------------------------

SpinorForm wedge(int i, const SpinorForm& phi) {
  const int n = 2 * phi.l();
  if (i < 0 || i >= n) throw InvalidArgument("wedge: covector index out of range");
  SpinorForm out(phi.l(), std::min(phi.degree() + 1, n + 1), phi.cap());
  if (phi.degree() + 1 > n) return out;
  for (const auto& [mask, s] : phi.components()) {
    if (mask & (FormIndex{1} << i)) continue;
    out.add(mask | (FormIndex{1} << i), s, GaussianRational(wedge_sign(mask, i)));
  }
  return out;
}

SpinorForm wedge_covector(std::span<const GaussianRational> xi, const SpinorForm& phi) {
  const int n = 2 * phi.l();
  if (xi.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("wedge_covector: covector length != 2l");
  SpinorForm out(phi.l(), std::min(phi.degree() + 1, n + 1), phi.cap());
  for (int i = 0; i < n; ++i) {
    if (xi[static_cast<std::size_t>(i)].is_zero()) continue;
    out.add_scaled(xi[static_cast<std::size_t>(i)], wedge(i, phi));
  }
  return out;
}

SpinorForm contract(int i, const SpinorForm& phi) {
  if (i < 0 || i >= 2 * phi.l()) throw InvalidArgument("contract: vector index out of range");
  SpinorForm out(phi.l(), std::max(phi.degree() - 1, -1), phi.cap());
  for (const auto& [mask, s] : phi.components()) {
    if (!(mask & (FormIndex{1} << i))) continue;
    out.add(mask & ~(FormIndex{1} << i), s, GaussianRational(wedge_sign(mask, i)));
  }
  return out;
}

SpinorForm op_X(const SpinorForm& phi) {
  const int n = 2 * phi.l();
  SpinorForm out(phi.l(), std::min(phi.degree() + 1, n + 1), phi.cap());
  if (phi.degree() + 1 > n) return out;
  for (const auto& [mask, s] : phi.components()) {
    for (int i = 0; i < n; ++i) {
      if (mask & (FormIndex{1} << i)) continue;
      out.add(mask | (FormIndex{1} << i), clifford_basis(i, s), GaussianRational(-wedge_sign(mask, i)));
    }
  }
  return out;
}

SpinorForm op_Y(const SpinorForm& phi) {
  const SymplecticSpace& space = standard_space(phi.l());
  const int n = space.dim();
  SpinorForm out(phi.l(), std::max(phi.degree() - 1, -1), phi.cap());
  for (const auto& [mask, s] : phi.components()) {
    for (int i = 0; i < n; ++i) {
      if (!(mask & (FormIndex{1} << i))) continue;
      const FormIndex reduced = mask & ~(FormIndex{1} << i);
      const int sign = wedge_sign(mask, i);
      for (int j : space.upper_support(i)) {
        Rational factor = space.omega_upper(i, j) * sign;
        out.add(reduced, clifford_basis(j, s), GaussianRational(factor));
      }
    }
  }
  return out;
}

SpinorForm op_H(const SpinorForm& phi) { return op_X(op_Y(phi)) + op_Y(op_X(phi)); }

// --- projectors --------------------------------------------------------------------------

std::string_view projector_name(Projector p) {
  switch (p) {
    case Projector::P10: return "p10";
    case Projector::P11: return "p11";
    case Projector::P20: return "p20";
    case Projector::P21: return "p21";
    case Projector::P22: return "p22";
  }
  return "?";
}

int projector_degree(Projector p) { return (p == Projector::P10 || p == Projector::P11) ? 1 : 2; }

namespace {

void require_projectable(Projector which, const SpinorForm& phi) {
  if (phi.l() < 2) throw InvalidArgument("isotypic projectors need l >= 2");
  if (phi.degree() != projector_degree(which)) {
    throw InvalidArgument(std::string(projector_name(which)) + " acts on " + std::to_string(projector_degree(which)) +
                          "-forms, got a " + std::to_string(phi.degree()) + "-form");
  }
}

GaussianRational rational_i(const Rational& im) { return {Rational(0), im}; }

}  // namespace

SpinorForm project(Projector which, const SpinorForm& phi) {
  require_projectable(which, phi);
  const Rational l(phi.l());
  const Rational inv_l = 1 / l;
  const Rational inv_1ml = 1 / (1 - l);

  if (which == Projector::P10 || which == Projector::P11) {
    SpinorForm p10 = op_X(op_Y(phi));
    p10 *= rational_i(inv_l);
    if (which == Projector::P10) return p10;
    return phi - p10;
  }

  const SpinorForm xy = op_X(op_Y(phi));
  const SpinorForm xxyy = op_X(op_X(op_Y(op_Y(phi))));
  SpinorForm out(phi.l(), 2, phi.cap());
  switch (which) {
    case Projector::P20:
      out.add_scaled(GaussianRational(inv_l), xxyy);
      break;
    case Projector::P21:
      // -i/(1-l) XY + (-i/(1-l)) (-i/l) X^2Y^2 = -i/(1-l) XY - 1/(l(1-l)) X^2Y^2
      out.add_scaled(rational_i(-inv_1ml), xy);
      out.add_scaled(GaussianRational(Rational(-inv_1ml * inv_l)), xxyy);
      break;
    case Projector::P22:
      out = phi;
      out.add_scaled(rational_i(inv_1ml), xy);
      out.add_scaled(GaussianRational(inv_1ml), xxyy);
      break;
    default:
      break;
  }
  return out;
}

TwoFormParts decompose_two_form(const SpinorForm& phi) {
  require_projectable(Projector::P20, phi);
  return {project(Projector::P20, phi), project(Projector::P21, phi), project(Projector::P22, phi)};
}

SpinorForm sp_action_form(const SpLieElement& a, const SpinorForm& phi) {
  const SymplecticSpace& space = standard_space(phi.l());
  const int n = space.dim();
  const Tensor m = a.endomorphism(space);

  SpinorForm out(phi.l(), phi.degree(), phi.cap());
  for (const auto& [mask, s] : phi.components()) {
    out.add(mask, sp_action(a, s));
  }
  // Dual action as a derivation: epsilon^i -> -sum_j M[i][j] epsilon^j, i.e. -sum_{ij} M[i][j] eps^j ^ iota_{e_i}.
  for (int i = 0; i < n; ++i) {
    bool any = false;
    for (int j = 0; j < n && !any; ++j) any = !is_zero(m({i, j}));
    if (!any) continue;
    const SpinorForm removed = contract(i, phi);
    if (removed.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(m({i, j}))) continue;
      out.add_scaled(GaussianRational(Rational(-m({i, j}))), wedge(j, removed));
    }
  }
  return out;
}

SpinorForm random_form(int l, int degree, int max_spinor_degree, int cap, SplitMix64& rng, std::int64_t bound) {
  SpinorForm out(l, degree, cap);
  if (degree < 0 || degree > 2 * l) return out;
  for (FormIndex mask = 0; mask < (FormIndex{1} << (2 * l)); ++mask) {
    if (std::popcount(mask) != degree) continue;
    out.add(mask, random_spinor(l, max_spinor_degree, cap, rng, bound));
  }
  return out;
}

SpinorForm parity_part(const SpinorForm& phi, int parity) {
  SpinorForm out(phi.l(), phi.degree(), phi.cap());
  for (const auto& [mask, s] : phi.components()) {
    auto [even, odd] = parity_decompose(s);
    out.add(mask, parity == 0 ? even : odd);
  }
  return out;
}

}  // namespace sympspin
