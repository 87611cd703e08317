#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace sympspin {

/// Maximum number of polynomial variables (2l <= 8 for connection data, l <= 8 for spinors).
inline constexpr int kMaxVariables = 8;

/// Exponent multi-index. Unused trailing slots are zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exponents{};

  static Monomial from(std::span<const int> alpha);

  int degree() const {
    int d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
  int operator[](int var) const { return exponents[static_cast<std::size_t>(var)]; }
  std::vector<int> to_vector(int vars) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All monomials in `vars` variables of total degree exactly `degree`, in lexicographic order.
std::vector<Monomial> monomials_of_degree(int vars, int degree);

}  // namespace sympspin
