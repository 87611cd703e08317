#include "sympspin/gaussian_rational.hpp"

#include <ostream>
#include <stdexcept>

#include "sympspin/errors.hpp"

namespace sympspin {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  // mpz does not accept a leading '+'.
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational inverse(const Rational& q) {
  if (is_zero(q)) throw std::domain_error("inverse of zero rational");
  return Rational(1) / q;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) return scale(o.re_);
  if (is_real()) {
    Rational r = re_;
    re_ = r * o.re_;
    im_ = r * o.im_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

GaussianRational& GaussianRational::scale(const Rational& factor) {
  re_ *= factor;
  im_ *= factor;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return im_part;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace sympspin
