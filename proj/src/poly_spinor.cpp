#include "sympspin/poly_spinor.hpp"

#include <string>

#include "sympspin/errors.hpp"

namespace sympspin {

// --- Monomial ------------------------------------------------------------------

Monomial Monomial::from(std::span<const int> alpha) {
  if (alpha.size() > static_cast<std::size_t>(kMaxVariables)) throw InvalidArgument("too many monomial variables");
  Monomial m;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] < 0 || alpha[k] > 255) throw InvalidArgument("monomial exponent out of range");
    m.exponents[k] = static_cast<std::uint8_t>(alpha[k]);
  }
  return m;
}

std::vector<int> Monomial::to_vector(int vars) const {
  return std::vector<int>(exponents.begin(), exponents.begin() + vars);
}

namespace {

void enumerate_monomials(int vars, int var, int remaining, Monomial& current, std::vector<Monomial>& out) {
  if (var == vars - 1) {
    current.exponents[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(remaining);
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.exponents[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
    enumerate_monomials(vars, var + 1, remaining - e, current, out);
  }
  current.exponents[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int vars, int degree) {
  std::vector<Monomial> out;
  if (vars < 1 || degree < 0) return out;
  Monomial current;
  enumerate_monomials(vars, 0, degree, current, out);
  return out;
}

// --- PolySpinor ------------------------------------------------------------------

PolySpinor::PolySpinor(int l, int cap) : l_(l), cap_(cap) {
  if (l < 1 || l > kMaxVariables) throw InvalidArgument("PolySpinor: l out of range");
  if (cap < 0) throw InvalidArgument("PolySpinor: negative degree cap");
}

PolySpinor PolySpinor::constant(int l, int cap, const GaussianRational& value) {
  PolySpinor s(l, cap);
  s.add_term(Monomial{}, value);
  return s;
}

PolySpinor PolySpinor::monomial(int l, int cap, std::span<const int> alpha, const GaussianRational& coeff) {
  if (alpha.size() != static_cast<std::size_t>(l)) throw DimensionMismatch("monomial exponent has wrong length");
  PolySpinor s(l, cap);
  s.add_term(Monomial::from(alpha), coeff);
  return s;
}

int PolySpinor::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

GaussianRational PolySpinor::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void PolySpinor::add_term(const Monomial& m, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  for (int v = l_; v < kMaxVariables; ++v) {
    if (m[v] != 0) throw InvalidArgument("monomial uses a variable beyond l");
  }
  if (m.degree() > cap_) {
    throw DegreeOverflow("monomial of degree " + std::to_string(m.degree()) + " exceeds spinor cap " +
                         std::to_string(cap_));
  }
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolySpinor PolySpinor::with_cap(int cap) const {
  PolySpinor out(l_, cap);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

PolySpinor PolySpinor::times_variable(int var) const {
  if (var < 0 || var >= l_) throw InvalidArgument("times_variable: variable out of range");
  PolySpinor out(l_, cap_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() >= cap_) {
      throw DegreeOverflow("Clifford multiplication by x^" + std::to_string(var + 1) + " exceeds spinor cap " +
                           std::to_string(cap_));
    }
    Monomial raised = m;
    ++raised.exponents[static_cast<std::size_t>(var)];
    out.terms_.emplace(raised, c);
  }
  return out;
}

PolySpinor PolySpinor::derivative(int var) const {
  if (var < 0 || var >= l_) throw InvalidArgument("derivative: variable out of range");
  PolySpinor out(l_, cap_);
  for (const auto& [m, c] : terms_) {
    const int e = m[var];
    if (e == 0) continue;
    Monomial lowered = m;
    --lowered.exponents[static_cast<std::size_t>(var)];
    GaussianRational coeff = c;
    coeff.scale(Rational(e));
    out.terms_.emplace(lowered, std::move(coeff));
  }
  return out;
}

void PolySpinor::require_compatible(const PolySpinor& o) const {
  if (l_ != o.l_ || cap_ != o.cap_) throw DimensionMismatch("PolySpinor operands differ in l or cap");
}

PolySpinor PolySpinor::operator-() const {
  PolySpinor out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

PolySpinor& PolySpinor::operator+=(const PolySpinor& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolySpinor& PolySpinor::operator-=(const PolySpinor& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PolySpinor& PolySpinor::operator*=(const GaussianRational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

PolySpinor& PolySpinor::add_scaled(const GaussianRational& factor, const PolySpinor& o) {
  require_compatible(o);
  if (factor.is_zero()) return *this;
  for (const auto& [m, c] : o.terms_) add_term(m, factor * c);
  return *this;
}

// --- Clifford multiplication -----------------------------------------------------

PolySpinor clifford_basis(int i, const PolySpinor& s) {
  const int l = s.l();
  if (i < 0 || i >= 2 * l) throw InvalidArgument("clifford_basis: index out of range");
  if (i < l) {
    PolySpinor out = s.times_variable(i);
    out *= GaussianRational::i();
    return out;
  }
  return s.derivative(i - l);
}

PolySpinor clifford_vector(std::span<const GaussianRational> v, const PolySpinor& s) {
  if (v.size() != static_cast<std::size_t>(2 * s.l())) throw DimensionMismatch("clifford_vector: vector length != 2l");
  PolySpinor out(s.l(), s.cap());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    out.add_scaled(v[i], clifford_basis(static_cast<int>(i), s));
  }
  return out;
}

PolySpinor clifford_word(std::span<const int> word, const PolySpinor& s) {
  PolySpinor out = s;
  for (std::size_t k = word.size(); k-- > 0;) out = clifford_basis(word[k], out);
  return out;
}

std::pair<PolySpinor, PolySpinor> parity_decompose(const PolySpinor& s) {
  PolySpinor even(s.l(), s.cap());
  PolySpinor odd(s.l(), s.cap());
  for (const auto& [m, c] : s.terms()) {
    (m.degree() % 2 == 0 ? even : odd).add_term(m, c);
  }
  return {std::move(even), std::move(odd)};
}

// --- sp(2l) action --------------------------------------------------------------

namespace {

bool is_symmetric_matrix(const Tensor& t) {
  if (t.rank() != 2) return false;
  for (int a = 0; a < t.dim(); ++a)
    for (int b = a + 1; b < t.dim(); ++b)
      if (t({a, b}) != t({b, a})) return false;
  return true;
}

}  // namespace

SpLieElement::SpLieElement(Tensor matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rank() != 2 || matrix_.dim() % 2 != 0) throw InvalidArgument("SpLieElement: need a 2l x 2l matrix");
  if (!is_symmetric_matrix(matrix_)) throw InvalidArgument("SpLieElement: matrix must be symmetric");
}

SpLieElement SpLieElement::zero(int l) {
  return SpLieElement(Tensor(2 * l, {Variance::Upper, Variance::Upper}));
}

SpLieElement SpLieElement::generator(int l, int a, int b) {
  Tensor m(2 * l, {Variance::Upper, Variance::Upper});
  m({a, b}) += 1;
  if (a != b) m({b, a}) += 1;
  return SpLieElement(std::move(m));
}

Tensor SpLieElement::endomorphism(const SymplecticSpace& space) const {
  const int n = space.dim();
  if (n != matrix_.dim()) throw DimensionMismatch("SpLieElement::endomorphism: dimension mismatch");
  Tensor out(n, {Variance::Upper, Variance::Lower});
  for (int b = 0; b < n; ++b) {
    for (int j = 0; j < n; ++j) {
      Rational acc;
      for (int a : space.lower_support(j)) acc += matrix_({a, b}) * space.omega_lower(a, j);
      out({b, j}) = std::move(acc);
    }
  }
  return out;
}

SpLieElement lie_bracket(const SpLieElement& a, const SpLieElement& b, const SymplecticSpace& space) {
  const int n = space.dim();
  // (A omega B)^{pq} = sum_{r,s} A^{pr} omega_{rs} B^{sq}
  auto a_omega_b = [&](const Tensor& x, const Tensor& y) {
    Tensor out(n, {Variance::Upper, Variance::Upper});
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        Rational acc;
        for (int r = 0; r < n; ++r)
          for (int s : space.lower_support(r)) acc += x({p, r}) * space.omega_lower(r, s) * y({s, q});
        out({p, q}) = std::move(acc);
      }
    return out;
  };
  return SpLieElement(a_omega_b(a.matrix(), b.matrix()) - a_omega_b(b.matrix(), a.matrix()));
}

GaussianRational sp_action_scale() { return GaussianRational(Rational(0), Rational(1, 2)); }

PolySpinor sp_action(const SpLieElement& a, const PolySpinor& s) {
  if (a.l() != s.l()) throw DimensionMismatch("sp_action: l mismatch");
  const int n = 2 * s.l();
  PolySpinor out(s.l(), s.cap());
  for (int q = 0; q < n; ++q) {
    bool any = false;
    for (int p = 0; p < n && !any; ++p) any = !is_zero(a(p, q));
    if (!any) continue;
    PolySpinor eq = clifford_basis(q, s);
    for (int p = 0; p < n; ++p) {
      if (is_zero(a(p, q))) continue;
      out.add_scaled(GaussianRational(a(p, q)), clifford_basis(p, eq));
    }
  }
  out *= sp_action_scale();
  return out;
}

PolySpinor random_spinor(int l, int max_degree, int cap, SplitMix64& rng, std::int64_t bound, double density) {
  if (max_degree > cap) throw DegreeOverflow("random_spinor: max_degree exceeds cap");
  PolySpinor s(l, cap);
  const auto threshold = static_cast<std::int64_t>(density * 1000.0);
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& m : monomials_of_degree(l, d)) {
      if (rng.uniform(0, 999) >= threshold) continue;
      s.add_term(m, rng.gaussian_rational(bound));
    }
  }
  return s;
}

SpLieElement random_sp_element(int l, SplitMix64& rng, std::int64_t bound) {
  Tensor m(2 * l, {Variance::Upper, Variance::Upper});
  for (int a = 0; a < 2 * l; ++a) {
    for (int b = a; b < 2 * l; ++b) {
      Rational q = rng.rational(bound);
      m({a, b}) = q;
      m({b, a}) = q;
    }
  }
  return SpLieElement(std::move(m));
}

}  // namespace sympspin
