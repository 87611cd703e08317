#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace sympspin {

/// Arbitrary precision rational, always kept in canonical form (reduced, positive denominator).
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
Rational inverse(const Rational& q);

/// Exact element of Q(i): a complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// The imaginary unit.
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  /// Multiply by a real rational, cheaper than a full complex product.
  GaussianRational& scale(const Rational& factor);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Human-readable form, e.g. "3/2", "-i", "1/2+3i".
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline GaussianRational inverse(const GaussianRational& z) { return z.inverse(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace sympspin
