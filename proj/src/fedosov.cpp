#include "sympspin/fedosov.hpp"

#include <sstream>

#include "sympspin/errors.hpp"
#include "sympspin/sampling.hpp"

namespace sympspin {

// --- RationalPolynomial ------------------------------------------------------------------

RationalPolynomial::RationalPolynomial(int vars) : vars_(vars) {
  if (vars < 1 || vars > kMaxVariables) throw InvalidArgument("RationalPolynomial: variable count out of range");
}

RationalPolynomial RationalPolynomial::constant(int vars, const Rational& value) {
  RationalPolynomial p(vars);
  p.add_term(Monomial{}, value);
  return p;
}

int RationalPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void RationalPolynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (sympspin::is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sympspin::is_zero(it->second)) terms_.erase(it);
  }
}

RationalPolynomial RationalPolynomial::derivative(int var) const {
  if (var < 0 || var >= vars_) throw InvalidArgument("derivative: variable out of range");
  RationalPolynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[var];
    if (e == 0) continue;
    Monomial lowered = m;
    --lowered.exponents[static_cast<std::size_t>(var)];
    out.terms_.emplace(lowered, Rational(c * e));
  }
  return out;
}

Rational RationalPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(vars_)) throw DimensionMismatch("evaluate: point has wrong dimension");
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < vars_; ++v)
      for (int e = 0; e < m[v]; ++e) term *= point[static_cast<std::size_t>(v)];
    total += term;
  }
  return total;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.vars_ != vars_) throw DimensionMismatch("polynomial variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.vars_ != vars_) throw DimensionMismatch("polynomial variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

RationalPolynomial& RationalPolynomial::scale(const Rational& factor) {
  if (sympspin::is_zero(factor)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.vars_ != b.vars_) throw DimensionMismatch("polynomial variable counts differ");
  RationalPolynomial out(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int v = 0; v < kMaxVariables; ++v) {
        const int e = ma[v] + mb[v];
        if (e > 255) throw InvalidArgument("polynomial exponent overflow");
        m.exponents[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e);
      }
      out.add_term(m, Rational(ca * cb));
    }
  return out;
}

std::string RationalPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Reverse lexicographic order puts x1-heavy terms first and the constant last.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m.degree() == 0;
    if (constant || magnitude != 1) {
      os << magnitude.get_str();
      if (!constant) os << "*";
    }
    bool first_var = true;
    for (int v = 0; v < vars_; ++v) {
      if (m[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << v + 1;
      if (m[v] > 1) os << "^" << m[v];
    }
  }
  return os.str();
}

// --- PolynomialConnection ----------------------------------------------------------------

PolynomialConnection::PolynomialConnection(int l, int degree_cap, std::vector<RationalPolynomial> gamma)
    : l_(l), degree_cap_(degree_cap), gamma_(std::move(gamma)) {
  if (l < 1 || 2 * l > kMaxVariables) throw InvalidArgument("PolynomialConnection: l out of range");
  if (degree_cap < 0) throw InvalidArgument("PolynomialConnection: negative degree cap");
  const auto n = static_cast<std::size_t>(dim());
  if (gamma_.size() != n * n * n) throw DimensionMismatch("PolynomialConnection: need (2l)^3 entries");
  for (const auto& p : gamma_) {
    if (p.vars() != dim()) throw DimensionMismatch("PolynomialConnection: entries must be polynomials in 2l variables");
    if (p.degree() > degree_cap) throw InvalidArgument("PolynomialConnection: entry exceeds degree cap");
  }
}

PolynomialConnection PolynomialConnection::flat(int l) {
  const auto n = static_cast<std::size_t>(2 * l);
  return PolynomialConnection(l, 0, std::vector<RationalPolynomial>(n * n * n, RationalPolynomial(2 * l)));
}

PolynomialConnection PolynomialConnection::with_entry(int i, int j, int k, RationalPolynomial p) const {
  std::vector<RationalPolynomial> gamma = gamma_;
  const int cap = std::max(degree_cap_, p.degree());
  gamma[index(i, j, k)] = std::move(p);
  return PolynomialConnection(l_, cap, std::move(gamma));
}

bool PolynomialConnection::is_totally_symmetric() const {
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto& g = (*this)(i, j, k);
        if (!(g == (*this)(j, i, k)) || !(g == (*this)(i, k, j))) return false;
      }
  return true;
}

RationalPolynomial PolynomialConnection::raised(int m, int j, int k) const {
  const SymplecticSpace& space = standard_space(l_);
  RationalPolynomial out(dim());
  for (int i : space.upper_support(m)) {
    RationalPolynomial term = (*this)(i, j, k);
    out += term.scale(space.omega_upper(m, i));
  }
  return out;
}

PolynomialConnection random_connection(int l, int degree, std::uint64_t seed) {
  if (l < 1) throw InvalidArgument("random_connection: l must be >= 1");
  if (degree < 0) throw InvalidArgument("random_connection: degree must be >= 0");
  const int n = 2 * l;
  SplitMix64 rng(seed);
  std::vector<RationalPolynomial> gamma(static_cast<std::size_t>(n * n * n), RationalPolynomial(n));
  auto at = [&](int i, int j, int k) -> RationalPolynomial& {
    return gamma[static_cast<std::size_t>((i * n + j) * n + k)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        RationalPolynomial p(n);
        for (int d = 0; d <= degree; ++d)
          for (const auto& m : monomials_of_degree(n, d)) {
            // Sparse: roughly half of the monomials populated.
            if (rng.uniform(0, 1) == 0) continue;
            p.add_term(m, rng.rational(3));
          }
        const int idx[3] = {i, j, k};
        // All permutations of (i, j, k) share the same polynomial.
        static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& perm : perms) at(idx[perm[0]], idx[perm[1]], idx[perm[2]]) = p;
      }
  return PolynomialConnection(l, degree, std::move(gamma));
}

ConnectionAxiomReport check_connection_axioms(const PolynomialConnection& gamma) {
  const SymplecticSpace& space = standard_space(gamma.l());
  const int n = gamma.dim();
  ConnectionAxiomReport report;

  // Gamma^m_{jk} for all (m, j, k).
  std::vector<RationalPolynomial> up(static_cast<std::size_t>(n * n * n), RationalPolynomial(n));
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) up[static_cast<std::size_t>((m * n + j) * n + k)] = gamma.raised(m, j, k);
  auto G = [&](int m, int j, int k) -> const RationalPolynomial& {
    return up[static_cast<std::size_t>((m * n + j) * n + k)];
  };

  for (int i = 0; i < n && report.symplectic; ++i)
    for (int j = 0; j < n && report.symplectic; ++j)
      for (int k = 0; k < n && report.symplectic; ++k) {
        // omega is constant on the flat model, so the derivative term vanishes.
        RationalPolynomial value(n);
        for (int m : space.lower_support(k)) {
          RationalPolynomial t = G(m, i, j);
          value -= t.scale(space.omega_lower(m, k));
        }
        for (int m : space.lower_support(j)) {
          RationalPolynomial t = G(m, i, k);
          value -= t.scale(space.omega_lower(j, m));
        }
        if (!value.is_zero()) {
          report.symplectic = false;
          std::ostringstream os;
          os << "(nabla_" << i + 1 << " omega)_{" << j + 1 << "," << k + 1 << "} = " << value.to_string();
          report.offending = os.str();
        }
      }

  for (int m = 0; m < n && report.torsion_free; ++m)
    for (int j = 0; j < n && report.torsion_free; ++j)
      for (int k = j + 1; k < n && report.torsion_free; ++k) {
        RationalPolynomial value = G(m, j, k) - G(m, k, j);
        if (!value.is_zero()) {
          report.torsion_free = false;
          if (report.offending.empty()) {
            std::ostringstream os;
            os << "T^" << m + 1 << "_{" << j + 1 << "," << k + 1 << "} = " << value.to_string();
            report.offending = os.str();
          }
        }
      }
  return report;
}

// --- curvature ---------------------------------------------------------------------------

CurvatureField::CurvatureField(int l, std::vector<RationalPolynomial> mixed, std::vector<RationalPolynomial> lowered)
    : l_(l), mixed_(std::move(mixed)), lowered_(std::move(lowered)) {
  const auto n = static_cast<std::size_t>(2 * l);
  if (mixed_.size() != n * n * n * n || lowered_.size() != n * n * n * n) {
    throw DimensionMismatch("CurvatureField: need (2l)^4 entries");
  }
}

bool CurvatureField::is_zero() const {
  for (const auto& p : lowered_)
    if (!p.is_zero()) return false;
  for (const auto& p : mixed_)
    if (!p.is_zero()) return false;
  return true;
}

CurvatureField curvature_field_of(const PolynomialConnection& gamma) {
  ConnectionAxiomReport axioms = check_connection_axioms(gamma);
  if (!axioms.passed()) throw InvalidArgument("connection is not symplectic and torsion-free: " + axioms.offending);

  const SymplecticSpace& space = standard_space(gamma.l());
  const int n = gamma.dim();
  const auto N = static_cast<std::size_t>(n);
  std::vector<RationalPolynomial> up(N * N * N, RationalPolynomial(n));
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) up[static_cast<std::size_t>((m * n + j) * n + k)] = gamma.raised(m, j, k);
  auto G = [&](int m, int j, int k) -> const RationalPolynomial& {
    return up[static_cast<std::size_t>((m * n + j) * n + k)];
  };
  auto idx4 = [&](int a, int b, int c, int d) { return ((static_cast<std::size_t>(a) * N + b) * N + c) * N + d; };

  std::vector<RationalPolynomial> mixed(N * N * N * N, RationalPolynomial(n));
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          RationalPolynomial value = G(m, l, j).derivative(k) - G(m, k, j).derivative(l);
          for (int a = 0; a < n; ++a) {
            value += G(m, k, a) * G(a, l, j);
            value -= G(m, l, a) * G(a, k, j);
          }
          RationalPolynomial negated = value;
          negated.scale(-1);
          mixed[idx4(m, j, k, l)] = std::move(value);
          mixed[idx4(m, j, l, k)] = std::move(negated);
        }

  // R_{ijkl} = omega_{mi} R^m_{jkl}. The opposite order omega_{im} flips every entry; the trace
  // oracle (trace_ricci_at against ricci_of) accepts this sign and rejects the other.
  // The support of omega is symmetric, so lower_support(i) lists every m with omega_{mi} != 0.
  std::vector<RationalPolynomial> lowered(N * N * N * N, RationalPolynomial(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          RationalPolynomial value(n);
          for (int m : space.lower_support(i)) {
            RationalPolynomial t = mixed[idx4(m, j, k, l)];
            value += t.scale(space.omega_lower(m, i));
          }
          lowered[idx4(i, j, k, l)] = std::move(value);
        }
  return CurvatureField(gamma.l(), std::move(mixed), std::move(lowered));
}

CurvatureTensor evaluate_curvature_at(const CurvatureField& field, std::span<const Rational> point) {
  const int n = 2 * field.l();
  if (point.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("evaluation point must have 2l entries");
  Tensor out = Tensor::covariant(n, 4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) out({i, j, k, l}) = field.lowered(i, j, k, l).evaluate(point);
  return CurvatureTensor(std::move(out));
}

Tensor trace_ricci_at(const CurvatureField& field, std::span<const Rational> point) {
  const int n = 2 * field.l();
  Tensor sigma = Tensor::covariant(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational acc;
      for (int m = 0; m < n; ++m) acc += field.mixed(m, j, m, i).evaluate(point);
      sigma({i, j}) = std::move(acc);
    }
  return sigma;
}

}  // namespace sympspin
