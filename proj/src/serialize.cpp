#include "sympspin/serialize.hpp"

#include "sympspin/errors.hpp"

namespace sympspin {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("key \"") + key + "\" must be an array");
  return v;
}

std::vector<int> index_list(const json& j, std::size_t expected, int dim) {
  if (!j.is_array() || j.size() != expected) throw ParseError("index list has wrong length");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("index must be an integer");
    const int i = v.get<int>() - 1;
    if (i < 0 || i >= dim) throw ParseError("index out of range");
    out.push_back(i);
  }
  return out;
}

json one_based(std::span<const int> idx) {
  json out = json::array();
  for (int i : idx) out.push_back(i + 1);
  return out;
}

std::vector<int> exponents(const json& j, int vars) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(vars)) throw ParseError("\"alpha\" has wrong length");
  std::vector<int> alpha;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > 255) throw ParseError("bad exponent");
    alpha.push_back(v.get<int>());
  }
  return alpha;
}

json spinor_terms(const PolySpinor& s, const json& prefix) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    json t = prefix;
    t["alpha"] = m.to_vector(s.l());
    t["re"] = to_string(c.re());
    t["im"] = to_string(c.im());
    terms.push_back(std::move(t));
  }
  return terms;
}

GaussianRational term_coefficient(const json& t) {
  return {rational_from_json(field(t, "re")), rational_from_json(field(t, "im"))};
}

}  // namespace

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json to_json(const PolySpinor& s) {
  return {{"l", s.l()}, {"cap", s.cap()}, {"terms", spinor_terms(s, json::object())}};
}

PolySpinor poly_spinor_from_json(const json& j) {
  PolySpinor s(int_field(j, "l"), int_field(j, "cap"));
  for (const auto& t : array_field(j, "terms")) {
    const auto alpha = exponents(field(t, "alpha"), s.l());
    s.add_term(Monomial::from(alpha), term_coefficient(t));
  }
  return s;
}

json to_json(const SpinorForm& phi) {
  json terms = json::array();
  for (const auto& [mask, s] : phi.components()) {
    const auto tuple = form_tuple(mask);
    for (auto& t : spinor_terms(s, json{{"tuple", one_based(tuple)}})) terms.push_back(std::move(t));
  }
  return {{"l", phi.l()}, {"cap", phi.cap()}, {"r", phi.degree()}, {"terms", terms}};
}

SpinorForm spinor_form_from_json(const json& j) {
  const int l = int_field(j, "l");
  const int cap = int_field(j, "cap");
  const int r = int_field(j, "r");
  SpinorForm phi(l, r, cap);
  for (const auto& t : array_field(j, "terms")) {
    if (r < 0) throw ParseError("form of this degree has no components");
    const auto tuple = index_list(field(t, "tuple"), static_cast<std::size_t>(r), 2 * l);
    const auto alpha = exponents(field(t, "alpha"), l);
    PolySpinor s(l, cap);
    s.add_term(Monomial::from(alpha), term_coefficient(t));
    try {
      phi.add(form_index(tuple, l), s);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return phi;
}

json rank4_to_json(const Tensor& t) {
  if (t.rank() != 4) throw DimensionMismatch("rank4_to_json needs a rank-4 tensor");
  json entries = json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (is_zero(t.flat(k))) continue;
    const auto idx = t.unflatten(k);
    entries.push_back({{"ijkl", one_based(idx)}, {"val", to_string(t.flat(k))}});
  }
  return {{"l", t.dim() / 2}, {"entries", entries}};
}

Tensor rank4_from_json(const json& j) {
  const int l = int_field(j, "l");
  if (l < 1) throw ParseError("l must be >= 1");
  Tensor t = Tensor::covariant(2 * l, 4);
  for (const auto& e : array_field(j, "entries")) {
    const auto idx = index_list(field(e, "ijkl"), 4, 2 * l);
    t.at(idx) = rational_from_json(field(e, "val"));
  }
  return t;
}

json rank2_to_json(const Tensor& t) {
  if (t.rank() != 2) throw DimensionMismatch("rank2_to_json needs a rank-2 tensor");
  json entries = json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (is_zero(t.flat(k))) continue;
    const auto idx = t.unflatten(k);
    entries.push_back({{"ij", one_based(idx)}, {"val", to_string(t.flat(k))}});
  }
  return {{"l", t.dim() / 2}, {"entries", entries}};
}

Tensor rank2_from_json(const json& j) {
  const int l = int_field(j, "l");
  if (l < 1) throw ParseError("l must be >= 1");
  Tensor t = Tensor::covariant(2 * l, 2);
  for (const auto& e : array_field(j, "entries")) {
    const auto idx = index_list(field(e, "ij"), 2, 2 * l);
    t.at(idx) = rational_from_json(field(e, "val"));
  }
  return t;
}

json to_json(const PolynomialConnection& gamma) {
  const int n = gamma.dim();
  json entries = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto& p = gamma(i, j, k);
        if (p.is_zero()) continue;
        json terms = json::array();
        for (const auto& [m, c] : p.terms()) terms.push_back({{"alpha", m.to_vector(n)}, {"val", to_string(c)}});
        const int idx[3] = {i, j, k};
        entries.push_back({{"ijk", one_based(idx)}, {"terms", terms}});
      }
  return {{"l", gamma.l()}, {"degree_cap", gamma.degree_cap()}, {"entries", entries}};
}

PolynomialConnection connection_from_json(const json& j) {
  const int l = int_field(j, "l");
  if (l < 1 || 2 * l > kMaxVariables) throw ParseError("l out of range");
  const int n = 2 * l;
  std::vector<RationalPolynomial> gamma(static_cast<std::size_t>(n * n * n), RationalPolynomial(n));
  for (const auto& e : array_field(j, "entries")) {
    const auto idx = index_list(field(e, "ijk"), 3, n);
    RationalPolynomial p(n);
    for (const auto& t : array_field(e, "terms")) {
      p.add_term(Monomial::from(exponents(field(t, "alpha"), n)), rational_from_json(field(t, "val")));
    }
    gamma[static_cast<std::size_t>((idx[0] * n + idx[1]) * n + idx[2])] = std::move(p);
  }
  try {
    return PolynomialConnection(l, int_field(j, "degree_cap"), std::move(gamma));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json rational_vector_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::vector<Rational> rational_vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace sympspin
