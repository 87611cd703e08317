#pragma once

#include <json.hpp>

#include "sympspin/curvature.hpp"
#include "sympspin/fedosov.hpp"
#include "sympspin/poly_spinor.hpp"
#include "sympspin/spinor_form.hpp"

namespace sympspin {

using json = nlohmann::json;

// All index lists in JSON are 1-based; rationals are "p/q" strings.
// Decoders throw ParseError on malformed input.

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const PolySpinor& s);
PolySpinor poly_spinor_from_json(const json& j);

json to_json(const SpinorForm& phi);
SpinorForm spinor_form_from_json(const json& j);

/// Rank-4 all-lower tensor; only nonzero entries are written.
json rank4_to_json(const Tensor& t);
Tensor rank4_from_json(const json& j);

/// Symmetric rank-2 data (Ricci tensors and sp elements).
json rank2_to_json(const Tensor& t);
Tensor rank2_from_json(const json& j);

json to_json(const PolynomialConnection& gamma);
PolynomialConnection connection_from_json(const json& j);

json rational_vector_to_json(const std::vector<Rational>& v);
std::vector<Rational> rational_vector_from_json(const json& j);

}  // namespace sympspin
